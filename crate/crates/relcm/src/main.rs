//! Command-line front end: parses JSON input documents, dispatches to the
//! library, and prints a human summary or (with `--json`) a versioned
//! machine-readable report.

use clap::{Parser, Subcommand};
use relcm::complex::Dim;
use relcm::doc::{complex_to_doc, parse_input, series_to_doc, InputDocument};
use relcm::hypersurface::{artinian_report, ArtinianVerdict, FinitenessVerdict};
use relcm::local_cohomology::{
    a_invariant_q, component_dim, component_krull_dim_x, grade_q, hochster_terms,
    is_relative_cm_q, reisner_classic, remark_equality_failures, top_cohomology_artinian,
    vanishing_profile, BigradedDegree, CohomologyProfile,
};
use relcm::monomial::{
    component_dim_monomial, is_relative_cm_monomial, regularity_bound,
    vanishing_profile_monomial, MonomialIdeal,
};
use relcm::stanley_reisner::{
    cd_p, cd_p_oracle, cd_q, cd_q_oracle, is_relative_unmixed_p, is_relative_unmixed_q,
};
use relcm::suite::{run_suite, SuiteConfig};
use relcm::{BiGround, Error, FieldSpec, Result, SimplicialComplex};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::process::ExitCode;
use std::time::Instant;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "relcm",
    version,
    about = "Relative Cohen-Macaulayness of bigraded Stanley-Reisner and monomial quotient rings"
)]
struct Cli {
    /// Coefficient field: `q` (rationals) or `fp:<p>` (prime field).
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Emit the machine-readable JSON report instead of the human summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: dimensions, cd values with oracles, grade, vanishing
    /// profile, the relative Cohen-Macaulay decision and its consequences.
    Analyze { path: String },
    /// Just the relative Cohen-Macaulay decision (with q when it holds).
    Rcm { path: String },
    /// The set of indices with nonvanishing local cohomology, with witnesses.
    Profile { path: String },
    /// Nonzero terms of the bigraded Hilbert series of `H^i_Q`.
    Hochster {
        #[arg(long)]
        i: i64,
        path: String,
    },
    /// Dimension of a single bigraded component `H^i_Q(...)_(a,b)`.
    Component {
        #[arg(long)]
        i: i64,
        /// Comma-separated x-degree, length m.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Comma-separated y-degree, length n.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        path: String,
    },
    /// x-graded Krull dimension of the y-degree-`b` slice of `H^i_Q`.
    #[command(name = "krulldim-x")]
    KrulldimX {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        path: String,
    },
    /// Operations on general (non-squarefree) monomial ideals.
    Monomial {
        #[command(subcommand)]
        sub: MonomialCommand,
    },
    /// Artinianness report for a hypersurface ring `S/fS`.
    Hypersurface { path: String },
    /// Seeded randomized property suite over all cross-module invariants.
    Propsuite {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum MonomialCommand {
    /// Vanishing profile, relative Cohen-Macaulay decision and regularity
    /// bound for `S/I`.
    Analyze { path: String },
    /// Dimension of one bigraded component of `H^i_Q(S/I)`.
    Component {
        #[arg(long)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        path: String,
    },
    /// The radical ideal and its complex.
    Radical { path: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

/// Sorts object keys recursively so the digest is independent of key order
/// and whitespace in the input file.
fn canonicalize(value: &Value) -> Value {
    match value {
        Value::Object(map) => {
            let mut sorted = Map::new();
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            for k in keys {
                sorted.insert(k.clone(), canonicalize(&map[k]));
            }
            Value::Object(sorted)
        }
        Value::Array(items) => Value::Array(items.iter().map(canonicalize).collect()),
        other => other.clone(),
    }
}

fn input_digest(text: &str) -> String {
    let canonical = match serde_json::from_str::<Value>(text) {
        Ok(v) => canonicalize(&v).to_string(),
        Err(_) => text.to_string(),
    };
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    format!("{:x}", hasher.finalize())
}

fn parse_csv(s: &str, expected: usize, what: &'static str) -> Result<Vec<i64>> {
    let values: Vec<i64> = if s.trim().is_empty() {
        Vec::new()
    } else {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Document(format!("bad {what} entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    if values.len() != expected {
        return Err(Error::DegreeLengthMismatch {
            expected,
            got: values.len(),
        });
    }
    Ok(values)
}

fn read_input(path: &str) -> Result<(String, InputDocument)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("cannot read {path}: {e}")))?;
    let doc = parse_input(&text)?;
    Ok((text, doc))
}

fn require_complex(doc: InputDocument) -> Result<SimplicialComplex> {
    match doc {
        InputDocument::Complex(c) | InputDocument::SquarefreeIdeal(c) => Ok(c),
        InputDocument::MonomialIdeal(i) => {
            if i.is_squarefree() {
                i.radical_complex()
            } else {
                Err(Error::Document(
                    "this command needs a complex or squarefree ideal; use the `monomial` subcommands".into(),
                ))
            }
        }
        InputDocument::Form(_) => Err(Error::Document(
            "this command needs a complex or ideal, not a form".into(),
        )),
    }
}

fn require_monomial(doc: InputDocument) -> Result<MonomialIdeal> {
    match doc {
        InputDocument::MonomialIdeal(i) => Ok(i),
        _ => Err(Error::Document(
            "this command needs a monomial ideal document".into(),
        )),
    }
}

fn dim_to_value(d: Dim) -> Value {
    match d.finite() {
        Some(v) => json!(v),
        None => json!("-inf"),
    }
}

fn names(ground: &BiGround, face: relcm::Face) -> Vec<String> {
    face.members()
        .into_iter()
        .map(|v| ground.vertex_name(v))
        .collect()
}

fn profile_to_value(ground: &BiGround, profile: &CohomologyProfile) -> Value {
    let entries: Vec<Value> = profile
        .nonzero_indices()
        .into_iter()
        .map(|i| {
            let w = profile.witness(i).expect("nonzero index has a witness");
            json!({
                "i": i,
                "witness": {
                    "F": names(ground, w.f),
                    "G": names(ground, w.g),
                    "homology_degree": w.homology_degree,
                },
            })
        })
        .collect();
    json!(entries)
}

struct Report {
    results: Value,
    human: String,
    failed: bool,
}

fn analyze_complex(c: &SimplicialComplex, field: FieldSpec) -> Result<Report> {
    let ground = c.ground();
    let (m, n) = (ground.m(), ground.n());
    let dw = c.restrict_to_w();
    let dv = c.restrict_to_v();
    let (q, q_oracle) = (cd_q(c)?, cd_q_oracle(c)?);
    let (p, p_oracle) = (cd_p(c)?, cd_p_oracle(c)?);
    let grade = grade_q(c, field)?;
    let profile = vanishing_profile(c, field)?;
    let rcm = is_relative_cm_q(c, field)?;
    let unmixed_q = is_relative_unmixed_q(c)?;
    let unmixed_p = is_relative_unmixed_p(c)?;
    let dw_pure = dw.is_pure();
    let dw_connected = dw.is_connected()?;
    let remark_failures = remark_equality_failures(c)?;
    let a_inv = a_invariant_q(c, field)?;

    let mut results = json!({
        "kind": "complex",
        "m": m,
        "n": n,
        "dim": dim_to_value(c.dim()),
        "dim_delta_w": dim_to_value(dw.dim()),
        "dim_delta_v": dim_to_value(dv.dim()),
        "cd_q": q,
        "cd_q_oracle": q_oracle,
        "cd_p": p,
        "cd_p_oracle": p_oracle,
        "grade_q": grade,
        "profile": profile_to_value(ground, &profile),
        "relative_cm": rcm.is_some(),
        "relative_unmixed_q": unmixed_q,
        "relative_unmixed_p": unmixed_p,
        "delta_w_pure": dw_pure,
        "delta_w_connected": dw_connected,
        "a_invariant_top": a_inv,
        "remark_equality_failures": remark_failures.len(),
    });
    if let Some(qv) = rcm {
        results["q"] = json!(qv);
        results["top_cohomology_artinian"] = json!(top_cohomology_artinian(c)?);
    }
    if m == 0 {
        results["classic_reisner"] = json!(reisner_classic(c, field)?);
    }

    let mut human = String::new();
    human += &format!(
        "complex on {m}+{n} vertices: dim = {}, dim Δ_W = {}, dim Δ_V = {}\n",
        c.dim(),
        dw.dim(),
        dv.dim()
    );
    human += &format!("cd_Q = {q} (oracle {q_oracle}), cd_P = {p} (oracle {p_oracle}), grade_Q = {grade} over {field}\n");
    human += &format!("nonvanishing indices: {:?}\n", profile.nonzero_indices());
    match rcm {
        Some(qv) => {
            human += &format!(
                "relative Cohen-Macaulay: yes (q = {qv}); top cohomology Artinian: {}\n",
                top_cohomology_artinian(c)?
            );
        }
        None => human += "relative Cohen-Macaulay: no\n",
    }
    human += &format!(
        "relative unmixed (Q): {unmixed_q}; Δ_W pure: {dw_pure}, connected: {dw_connected}; a-invariant at top: {a_inv}\n"
    );
    if m == 0 {
        human += &format!("classical Reisner criterion: {}\n", reisner_classic(c, field)?);
    }
    Ok(Report {
        results,
        human,
        failed: false,
    })
}

fn analyze_monomial(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Report> {
    let profile = vanishing_profile_monomial(ideal, field)?;
    let rcm = is_relative_cm_monomial(ideal, field)?;
    let radical = ideal.radical();
    let radical_cd = cd_q(&ideal.radical_complex()?)?;
    let mut results = json!({
        "kind": "monomial_ideal",
        "m": ideal.ground().m(),
        "n": ideal.ground().n(),
        "sigma": ideal.sigma(),
        "rho": ideal.rho(),
        "squarefree": ideal.is_squarefree(),
        "profile_indices": profile.nonzero_indices(),
        "relative_cm": rcm.is_some(),
        "radical_cd_q": radical_cd,
        "radical_generators": radical
            .generators()
            .iter()
            .map(|g| json!({"x": g.x, "y": g.y}))
            .collect::<Vec<_>>(),
    });
    let mut human = format!(
        "monomial ideal, {} minimal generators, σ = {:?}, ρ = {:?}\n",
        ideal.generators().len(),
        ideal.sigma(),
        ideal.rho()
    );
    human += &format!(
        "nonvanishing indices over {field}: {:?}; cd_Q(radical) = {radical_cd}\n",
        profile.nonzero_indices()
    );
    match rcm {
        Some(qv) => {
            let bound = regularity_bound(ideal, field)?;
            results["q"] = json!(qv);
            results["regularity_bound"] = json!(bound);
            human += &format!(
                "relative Cohen-Macaulay: yes (q = {qv}); regularity bound: {bound}\n"
            );
        }
        None => human += "relative Cohen-Macaulay: no\n",
    }
    Ok(Report {
        results,
        human,
        failed: false,
    })
}

fn hypersurface_report(doc: InputDocument) -> Result<Report> {
    let InputDocument::Form(f) = doc else {
        return Err(Error::Document("this command needs a form document".into()));
    };
    let report = artinian_report(&f);
    let h_fg = match report.h_n_minus_1_finitely_generated {
        FinitenessVerdict::NotFinitelyGenerated => "not_finitely_generated",
        FinitenessVerdict::Degenerate => "degenerate",
    };
    let (h_n, h_n_reason) = match &report.h_n_artinian {
        ArtinianVerdict::Artinian => ("artinian", None),
        ArtinianVerdict::NotArtinian { reason } => ("not_artinian", Some(reason.clone())),
        ArtinianVerdict::Inconclusive => ("inconclusive", None),
        ArtinianVerdict::UnsupportedCoefficients => ("unsupported_coefficients", None),
    };
    let results = json!({
        "kind": "hypersurface",
        "m": f.ground().m(),
        "n": f.ground().n(),
        "bidegree": [f.bidegree().0, f.bidegree().1],
        "h_n_minus_1_finitely_generated": h_fg,
        "h_n_minus_1_artinian": report.h_n_minus_1_artinian,
        "h_n_artinian": h_n,
        "h_n_reason": h_n_reason,
        "content_supported": report.content.supported,
        "content_generators": report.content.generators,
    });
    let mut human = format!(
        "hypersurface ring S/fS, bidegree {:?}\n",
        f.bidegree()
    );
    human += &format!(
        "H^(n-1)_Q: {}; Artinian: {}\n",
        h_fg.replace('_', " "),
        report.h_n_minus_1_artinian
    );
    human += &format!("H^n_Q Artinian: {}", h_n.replace('_', " "));
    if let Some(r) = &h_n_reason {
        human += &format!(" ({r})");
    }
    human.push('\n');
    if report.content.supported {
        human += &format!("content ideal generators (x-exponents): {:?}\n", report.content.generators);
    } else {
        human += "content ideal: outside the monomial-coefficient fragment\n";
    }
    Ok(Report {
        results,
        human,
        failed: false,
    })
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let field = FieldSpec::parse(&cli.field)?;
    let start = Instant::now();
    let (command_name, digest, report) = match &cli.command {
        Command::Analyze { path } => {
            let (text, doc) = read_input(path)?;
            let report = match doc {
                InputDocument::Complex(c) | InputDocument::SquarefreeIdeal(c) => {
                    analyze_complex(&c, field)?
                }
                InputDocument::MonomialIdeal(i) => analyze_monomial(&i, field)?,
                form @ InputDocument::Form(_) => hypersurface_report(form)?,
            };
            ("analyze", input_digest(&text), report)
        }
        Command::Rcm { path } => {
            let (text, doc) = read_input(path)?;
            let report = match doc {
                InputDocument::MonomialIdeal(ideal) if !ideal.is_squarefree() => {
                    let rcm = is_relative_cm_monomial(&ideal, field)?;
                    Report {
                        results: json!({ "relative_cm": rcm.is_some(), "q": rcm }),
                        human: match rcm {
                            Some(q) => format!("relative Cohen-Macaulay: yes (q = {q})\n"),
                            None => "relative Cohen-Macaulay: no\n".into(),
                        },
                        failed: false,
                    }
                }
                other => {
                    let c = require_complex(other)?;
                    let rcm = is_relative_cm_q(&c, field)?;
                    Report {
                        results: json!({ "relative_cm": rcm.is_some(), "q": rcm }),
                        human: match rcm {
                            Some(q) => format!("relative Cohen-Macaulay: yes (q = {q})\n"),
                            None => "relative Cohen-Macaulay: no\n".into(),
                        },
                        failed: false,
                    }
                }
            };
            ("rcm", input_digest(&text), report)
        }
        Command::Profile { path } => {
            let (text, doc) = read_input(path)?;
            let report = match doc {
                InputDocument::MonomialIdeal(ideal) if !ideal.is_squarefree() => {
                    let profile = vanishing_profile_monomial(&ideal, field)?;
                    Report {
                        results: json!({ "indices": profile.nonzero_indices() }),
                        human: format!(
                            "nonvanishing indices over {field}: {:?}\n",
                            profile.nonzero_indices()
                        ),
                        failed: false,
                    }
                }
                other => {
                    let c = require_complex(other)?;
                    let profile = vanishing_profile(&c, field)?;
                    Report {
                        results: json!({
                            "indices": profile.nonzero_indices(),
                            "profile": profile_to_value(c.ground(), &profile),
                        }),
                        human: format!(
                            "nonvanishing indices over {field}: {:?}\n",
                            profile.nonzero_indices()
                        ),
                        failed: false,
                    }
                }
            };
            ("profile", input_digest(&text), report)
        }
        Command::Hochster { i, path } => {
            let (text, doc) = read_input(path)?;
            let c = require_complex(doc)?;
            let terms = hochster_terms(&c, *i, field)?;
            let value = series_to_doc(c.ground(), *i, &terms);
            let mut human = format!("{} nonzero series terms at i = {i}:\n", terms.len());
            for t in &terms {
                human += &format!(
                    "  F = {:?}, G = {:?}, coeff = {}\n",
                    names(c.ground(), t.f),
                    names(c.ground(), t.g),
                    t.coeff
                );
            }
            (
                "hochster",
                input_digest(&text),
                Report {
                    results: value,
                    human,
                    failed: false,
                },
            )
        }
        Command::Component { i, a, b, path } => {
            let (text, doc) = read_input(path)?;
            let report = match doc {
                InputDocument::MonomialIdeal(ideal) if !ideal.is_squarefree() => {
                    let degree = BigradedDegree::new(
                        parse_csv(a, ideal.ground().m(), "a")?,
                        parse_csv(b, ideal.ground().n(), "b")?,
                    );
                    let d = component_dim_monomial(&ideal, *i, &degree, field)?;
                    Report {
                        results: json!({ "i": i, "a": degree.a, "b": degree.b, "dim": d }),
                        human: format!("dim_K H^{i}_Q(S/I)_(a,b) = {d}\n"),
                        failed: false,
                    }
                }
                other => {
                    let c = require_complex(other)?;
                    let degree = BigradedDegree::new(
                        parse_csv(a, c.ground().m(), "a")?,
                        parse_csv(b, c.ground().n(), "b")?,
                    );
                    let d = component_dim(&c, *i, &degree, field)?;
                    Report {
                        results: json!({ "i": i, "a": degree.a, "b": degree.b, "dim": d }),
                        human: format!("dim_K H^{i}_Q(K[Δ])_(a,b) = {d}\n"),
                        failed: false,
                    }
                }
            };
            ("component", input_digest(&text), report)
        }
        Command::KrulldimX { i, b, path } => {
            let (text, doc) = read_input(path)?;
            let c = require_complex(doc)?;
            let b = parse_csv(b, c.ground().n(), "b")?;
            let d = component_krull_dim_x(&c, *i, &b, field)?;
            (
                "krulldim-x",
                input_digest(&text),
                Report {
                    results: json!({ "i": i, "b": b, "krull_dim_x": dim_to_value(d) }),
                    human: format!("x-graded Krull dimension of H^{i}_Q at b = {b:?}: {d}\n"),
                    failed: false,
                },
            )
        }
        Command::Monomial { sub } => match sub {
            MonomialCommand::Analyze { path } => {
                let (text, doc) = read_input(path)?;
                let ideal = require_monomial(doc)?;
                ("monomial analyze", input_digest(&text), analyze_monomial(&ideal, field)?)
            }
            MonomialCommand::Component { i, a, b, path } => {
                let (text, doc) = read_input(path)?;
                let ideal = require_monomial(doc)?;
                let degree = BigradedDegree::new(
                    parse_csv(a, ideal.ground().m(), "a")?,
                    parse_csv(b, ideal.ground().n(), "b")?,
                );
                let d = component_dim_monomial(&ideal, *i, &degree, field)?;
                (
                    "monomial component",
                    input_digest(&text),
                    Report {
                        results: json!({ "i": i, "a": degree.a, "b": degree.b, "dim": d }),
                        human: format!("dim_K H^{i}_Q(S/I)_(a,b) = {d}\n"),
                        failed: false,
                    },
                )
            }
            MonomialCommand::Radical { path } => {
                let (text, doc) = read_input(path)?;
                let ideal = require_monomial(doc)?;
                let radical = ideal.radical();
                let complex = ideal.radical_complex()?;
                (
                    "monomial radical",
                    input_digest(&text),
                    Report {
                        results: json!({
                            "generators": radical
                                .generators()
                                .iter()
                                .map(|g| json!({"x": g.x, "y": g.y}))
                                .collect::<Vec<_>>(),
                            "complex": complex_to_doc(&complex),
                        }),
                        human: format!(
                            "radical has {} minimal generators; complex facets: {:?}\n",
                            radical.generators().len(),
                            complex
                                .facets()
                                .iter()
                                .map(|f| names(complex.ground(), *f))
                                .collect::<Vec<_>>()
                        ),
                        failed: false,
                    },
                )
            }
        },
        Command::Hypersurface { path } => {
            let (text, doc) = read_input(path)?;
            ("hypersurface", input_digest(&text), hypersurface_report(doc)?)
        }
        Command::Propsuite {
            seed,
            count,
            max_m,
            max_n,
        } => {
            if *count == 0 {
                return Err(Error::Document("count must be at least 1".into()));
            }
            let config = SuiteConfig {
                seed: *seed,
                count: *count,
                max_m: *max_m,
                max_n: *max_n,
            };
            let report = run_suite(&config)?;
            let mut human = format!("property suite ({})\n", report.config_summary);
            for p in &report.properties {
                human += &format!(
                    "  [{}] {} ({} instances)\n",
                    if p.passed() { "pass" } else { "FAIL" },
                    p.name,
                    p.checked
                );
                for f in &p.failures {
                    human += &format!("      counterexample: {f}\n");
                }
            }
            let results = json!({
                "config": report.config_summary,
                "passed": report.passed(),
                "properties": report
                    .properties
                    .iter()
                    .map(|p| json!({
                        "name": p.name,
                        "checked": p.checked,
                        "passed": p.passed(),
                        "failures": p.failures,
                    }))
                    .collect::<Vec<_>>(),
            });
            let digest = input_digest(&report.config_summary);
            (
                "propsuite",
                digest,
                Report {
                    failed: !report.passed(),
                    results,
                    human,
                },
            )
        }
    };

    let failed = report.failed;
    if cli.json {
        let payload = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command_name,
            "input_digest": digest,
            "field": field.to_string(),
            "results": report.results,
            "elapsed_ms": start.elapsed().as_millis() as u64,
            "version": env!("CARGO_PKG_VERSION"),
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        print!("{}", report.human);
    }
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}
