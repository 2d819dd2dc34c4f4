//! Seeded randomized property suite: cross-checks every decision procedure
//! against its independent oracle on random complexes and monomial ideals.
//!
//! All randomness flows from a single ChaCha8 stream, so a seed reproduces
//! the exact run. On a failing complex property the instance is shrunk by
//! repeatedly dropping facets while the failure persists, and the minimized
//! counterexample is reported.

use crate::complex::{BiGround, Dim, Face, SimplicialComplex};
use crate::error::Result;
use crate::homology::{
    boundary_matrix, reduced_euler_characteristic, reduced_homology, FieldSpec,
};
use crate::local_cohomology::{
    component_krull_dim_x, grade_q, is_relative_cm_q, reisner_classic, vanishing_profile,
};
use crate::monomial::{
    component_dim_monomial, vanishing_profile_monomial, MonomialGenerator, MonomialIdeal,
};
use crate::local_cohomology::BigradedDegree;
use crate::stanley_reisner::{
    cd_p, cd_p_oracle, cd_q, cd_q_oracle, is_relative_unmixed_q,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bounds and sizes for one suite run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub max_m: usize,
    pub max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            count: 200,
            max_m: 3,
            max_n: 3,
        }
    }
}

/// Outcome of one named property over the whole run.
#[derive(Debug, Clone)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Full suite report.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub config_summary: String,
    pub properties: Vec<PropertyResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }
}

/// Random complex: `m ≤ max_m` x-vertices, `1..=max_n` y-vertices, up to
/// four random non-empty facets.
pub fn random_complex(rng: &mut ChaCha8Rng, max_m: usize, max_n: usize) -> SimplicialComplex {
    let m = rng.gen_range(0..=max_m);
    let n = rng.gen_range(1..=max_n.max(1));
    let ground = BiGround::new(m, n).expect("n >= 1");
    let size = ground.size();
    let facet_count = rng.gen_range(1..=4);
    let facets = (0..facet_count)
        .map(|_| {
            let bits = rng.gen_range(1..(1u64 << size));
            Face::from_members((0..size).filter(|&i| bits >> i & 1 == 1))
        })
        .collect();
    SimplicialComplex::new(ground, facets).expect("faces within ground")
}

/// Random monomial ideal with exponents `≤ 3`, never the unit ideal.
pub fn random_monomial_ideal(
    rng: &mut ChaCha8Rng,
    max_m: usize,
    max_n: usize,
) -> MonomialIdeal {
    let m = rng.gen_range(0..=max_m);
    let n = rng.gen_range(1..=max_n.max(1));
    let ground = BiGround::new(m, n).expect("n >= 1");
    let gen_count = rng.gen_range(1..=4);
    let mut gens = Vec::new();
    for _ in 0..gen_count {
        loop {
            let x: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=3)).collect();
            let y: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            if x.iter().any(|&e| e > 0) || y.iter().any(|&e| e > 0) {
                gens.push(MonomialGenerator { x, y });
                break;
            }
        }
    }
    MonomialIdeal::new(ground, gens).expect("well-formed generators")
}

fn describe(complex: &SimplicialComplex) -> String {
    format!(
        "m={} n={} facets={:?}",
        complex.ground().m(),
        complex.ground().n(),
        complex
            .facets()
            .iter()
            .map(|f| f.members())
            .collect::<Vec<_>>()
    )
}

fn describe_ideal(ideal: &MonomialIdeal) -> String {
    format!(
        "m={} n={} generators={:?}",
        ideal.ground().m(),
        ideal.ground().n(),
        ideal
            .generators()
            .iter()
            .map(|g| (g.x.clone(), g.y.clone()))
            .collect::<Vec<_>>()
    )
}

type ComplexCheck = fn(&SimplicialComplex) -> Result<Option<String>>;

/// Drops facets one at a time while the check still fails, then reports the
/// smaller instance.
fn shrink_complex(
    complex: &SimplicialComplex,
    check: ComplexCheck,
    message: String,
) -> String {
    let mut current = complex.clone();
    let mut message = message;
    loop {
        let mut improved = false;
        for skip in 0..current.facets().len() {
            if current.facets().len() <= 1 {
                break;
            }
            let reduced_facets: Vec<Face> = current
                .facets()
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, f)| *f)
                .collect();
            let candidate =
                SimplicialComplex::new(current.ground().clone(), reduced_facets)
                    .expect("subset of valid facets");
            if let Ok(Some(msg)) = check(&candidate) {
                current = candidate;
                message = msg;
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }
    format!("{} [{}]", message, describe(&current))
}

fn check_cd_oracles(c: &SimplicialComplex) -> Result<Option<String>> {
    let (q, qo) = (cd_q(c)?, cd_q_oracle(c)?);
    if q != qo {
        return Ok(Some(format!("cd_Q {q} != oracle {qo}")));
    }
    let (p, po) = (cd_p(c)?, cd_p_oracle(c)?);
    if p != po {
        return Ok(Some(format!("cd_P {p} != oracle {po}")));
    }
    Ok(None)
}

fn check_criterion_equivalence(c: &SimplicialComplex) -> Result<Option<String>> {
    for field in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
        let by_criterion = is_relative_cm_q(c, field)?;
        let profile = vanishing_profile(c, field)?;
        let singleton = profile.is_singleton();
        if by_criterion.is_some() != singleton {
            return Ok(Some(format!(
                "criterion {:?} vs profile {:?} over {field}",
                by_criterion,
                profile.nonzero_indices()
            )));
        }
        if let Some(q) = by_criterion {
            if profile.nonzero_indices() != vec![q] {
                return Ok(Some(format!(
                    "criterion q={q} but profile {:?} over {field}",
                    profile.nonzero_indices()
                )));
            }
        }
    }
    Ok(None)
}

fn check_rcm_consequences(c: &SimplicialComplex) -> Result<Option<String>> {
    if is_relative_cm_q(c, FieldSpec::Rationals)?.is_none() {
        return Ok(None);
    }
    if !is_relative_unmixed_q(c)? {
        return Ok(Some("relative CM but not relative unmixed".into()));
    }
    let dw = c.restrict_to_w();
    if !dw.is_pure() {
        return Ok(Some("relative CM but Delta_W impure".into()));
    }
    if dw.dim() >= Dim::Finite(1) && !dw.is_connected()? {
        return Ok(Some("relative CM but Delta_W disconnected".into()));
    }
    Ok(None)
}

fn check_dimension_sum(c: &SimplicialComplex) -> Result<Option<String>> {
    if is_relative_cm_q(c, FieldSpec::Rationals)?.is_none() {
        return Ok(None);
    }
    let lhs = cd_p(c)? + cd_q(c)?;
    let rhs = c.dim().finite().expect("non-void") + 1;
    if lhs != rhs {
        return Ok(Some(format!("cd_P + cd_Q = {lhs} != dim + 1 = {rhs}")));
    }
    Ok(None)
}

fn check_grade_bounds(c: &SimplicialComplex) -> Result<Option<String>> {
    let g = grade_q(c, FieldSpec::Rationals)?;
    let q = cd_q(c)?;
    if g > q {
        return Ok(Some(format!("grade {g} > cd {q}")));
    }
    let w = c.ground().w_mask();
    let min_w = c
        .facets()
        .iter()
        .map(|f| f.intersect(w).cardinality() as i64)
        .min()
        .expect("non-void");
    if g > min_w {
        return Ok(Some(format!(
            "grade {g} exceeds min |F cap W| = {min_w} over associated primes"
        )));
    }
    Ok(None)
}

fn check_links_of_w_restriction(c: &SimplicialComplex) -> Result<Option<String>> {
    if is_relative_cm_q(c, FieldSpec::Rationals)?.is_none() {
        return Ok(None);
    }
    let dw = c.restrict_to_w();
    for f in dw.all_faces() {
        let link = dw.link(f)?;
        // rebuild the link on a pure-W ground so the classical criterion
        // applies
        let n = c.ground().n();
        let m = c.ground().m();
        let ground = BiGround::new(0, n)?;
        let shifted: Vec<Face> = link
            .facets()
            .iter()
            .map(|fac| Face::from_members(fac.members().into_iter().map(|v| v - m)))
            .collect();
        let link0 = SimplicialComplex::new(ground, shifted)?;
        if !reisner_classic(&link0, FieldSpec::Rationals)? {
            return Ok(Some(format!(
                "link of {:?} in Delta_W is not Cohen-Macaulay",
                f.members()
            )));
        }
    }
    Ok(None)
}

fn check_krull_dim_sampling(c: &SimplicialComplex) -> Result<Option<String>> {
    let Some(q) = is_relative_cm_q(c, FieldSpec::Rationals)? else {
        return Ok(None);
    };
    if q == 0 {
        // Delta_W = {emptyset}: there is no facet indicator to push down
        return Ok(None);
    }
    let p = cd_p(c)?;
    let m = c.ground().m();
    let n = c.ground().n();
    let dw = c.restrict_to_w();
    for t in 1..=3i64 {
        let mut best = Dim::MinusInfinity;
        for facet in dw.facets() {
            let b: Vec<i64> = (0..n)
                .map(|j| if facet.contains(m + j) { -t } else { 0 })
                .collect();
            let dim = component_krull_dim_x(c, q, &b, FieldSpec::Rationals)?;
            if dim > Dim::Finite(p) {
                return Ok(Some(format!(
                    "krull dim at i={q}, b={b:?} is {dim}, above cd_P = {p}"
                )));
            }
            best = best.max(dim);
        }
        if best != Dim::Finite(p) {
            return Ok(Some(format!(
                "max krull dim over facet slices at i={q}, t={t} is {best}, expected cd_P = {p}"
            )));
        }
    }
    Ok(None)
}

fn check_homology_internals(c: &SimplicialComplex) -> Result<Option<String>> {
    let h = reduced_homology(c, FieldSpec::Rationals);
    if h.reduced_euler_characteristic() != reduced_euler_characteristic(c) {
        return Ok(Some("Euler characteristic mismatch".into()));
    }
    // boundary-of-boundary vanishes: compose consecutive sparse matrices
    let top = c.dim().finite().unwrap_or(-1);
    for k in 0..=top {
        let d_k = boundary_matrix(c, k)?;
        let d_k1 = boundary_matrix(c, k + 1)?;
        for (col, entries) in d_k1.col_entries.iter().enumerate() {
            let mut acc = vec![0i64; d_k.rows];
            for &(mid, s1) in entries {
                for &(row, s2) in &d_k.col_entries[mid] {
                    acc[row] += s1 as i64 * s2 as i64;
                }
            }
            if acc.iter().any(|&v| v != 0) {
                return Ok(Some(format!(
                    "boundary composition nonzero at k={k}, column {col}"
                )));
            }
        }
    }
    Ok(None)
}

fn check_cone_acyclicity(c: &SimplicialComplex) -> Result<Option<String>> {
    // cone over the complex with a fresh y-vertex, when the ground allows it
    let ground = c.ground();
    if ground.size() + 1 > crate::complex::MAX_GROUND {
        return Ok(None);
    }
    let apex = ground.size();
    let cone_ground = BiGround::new(ground.m(), ground.n() + 1)?;
    let cone_facets: Vec<Face> = c
        .facets()
        .iter()
        .map(|f| f.union(Face::singleton(apex)))
        .collect();
    let cone = SimplicialComplex::new(cone_ground, cone_facets)?;
    for field in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
        if !reduced_homology(&cone, field).is_zero() {
            return Ok(Some(format!("cone not acyclic over {field}")));
        }
    }
    Ok(None)
}

fn check_transpose_symmetry(c: &SimplicialComplex) -> Result<Option<String>> {
    let t = c.transposed();
    if cd_p(c)? != cd_q(&t)? || cd_q(c)? != cd_p(&t)? {
        return Ok(Some("cd_P/cd_Q not exchanged by transposition".into()));
    }
    Ok(None)
}

/// Radical invariance on the degrees where it holds: `b ≤ 0` and each
/// `a_i ∈ {0} ∪ [σ_i, ∞)` — there the threshold predicates of `I` and `√I`
/// coincide. The cohomological dimension is radical-invariant outright.
fn check_radical_invariance(ideal: &MonomialIdeal) -> Result<Option<String>> {
    if ideal.is_unit() {
        return Ok(None);
    }
    let radical = ideal.radical();
    let (m, n) = (ideal.ground().m(), ideal.ground().n());
    let mut degrees: Vec<BigradedDegree> = vec![BigradedDegree::new(vec![], vec![])];
    for i in 0..m {
        let s = ideal.sigma()[i] as i64;
        let choices = if s == 0 { vec![0] } else { vec![0, s, s + 1] };
        degrees = degrees
            .into_iter()
            .flat_map(|d| {
                choices.iter().map(move |&v| {
                    let mut a = d.a.clone();
                    a.push(v);
                    BigradedDegree::new(a, d.b.clone())
                })
            })
            .collect();
    }
    for _ in 0..n {
        degrees = degrees
            .into_iter()
            .flat_map(|d| {
                [-1i64, 0].iter().map(move |&v| {
                    let mut b = d.b.clone();
                    b.push(v);
                    BigradedDegree::new(d.a.clone(), b)
                })
            })
            .collect();
    }
    let top = (n as i64) + 1;
    for degree in &degrees {
        for i in 0..=top {
            let di = component_dim_monomial(ideal, i, degree, FieldSpec::Rationals)?;
            let dr = component_dim_monomial(&radical, i, degree, FieldSpec::Rationals)?;
            if di != dr {
                return Ok(Some(format!(
                    "components differ at i={i}, a={:?}, b={:?}: {di} vs {dr}",
                    degree.a, degree.b
                )));
            }
        }
    }
    let cd_i = vanishing_profile_monomial(ideal, FieldSpec::Rationals)?
        .max_index()
        .expect("proper ideal");
    let cd_r = cd_q(&ideal.radical_complex()?)?;
    if cd_i != cd_r {
        return Ok(Some(format!("cd {cd_i} of I differs from cd {cd_r} of radical")));
    }
    Ok(None)
}

const COMPLEX_CHECKS: &[(&str, ComplexCheck)] = &[
    ("cd equals facet oracle (Q and P)", check_cd_oracles),
    ("criterion matches singleton profile (Q, F2)", check_criterion_equivalence),
    ("relative CM implies unmixed, pure and connected Delta_W", check_rcm_consequences),
    ("relative CM implies cd_P + cd_Q = dim + 1", check_dimension_sum),
    ("grade bounded by cd and associated primes", check_grade_bounds),
    ("relative CM implies Cohen-Macaulay links in Delta_W", check_links_of_w_restriction),
    ("graded Krull dimension at the top index equals cd_P", check_krull_dim_sampling),
    ("Euler identity and boundary composition", check_homology_internals),
    ("cones are acyclic", check_cone_acyclicity),
    ("transposition exchanges cd_P and cd_Q", check_transpose_symmetry),
];

/// Runs the whole suite; deterministic in the seed.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let complexes: Vec<SimplicialComplex> = (0..config.count)
        .map(|_| random_complex(&mut rng, config.max_m, config.max_n))
        .collect();
    let ideals: Vec<MonomialIdeal> = (0..config.count)
        .map(|_| random_monomial_ideal(&mut rng, config.max_m, config.max_n))
        .collect();

    let mut properties = Vec::new();
    for (name, check) in COMPLEX_CHECKS {
        let mut failures = Vec::new();
        for c in &complexes {
            if let Some(msg) = check(c)? {
                failures.push(shrink_complex(c, *check, msg));
            }
        }
        properties.push(PropertyResult {
            name,
            checked: complexes.len(),
            failures,
        });
    }

    let mut failures = Vec::new();
    for ideal in &ideals {
        if let Some(msg) = check_radical_invariance(ideal)? {
            failures.push(format!("{} [{}]", msg, describe_ideal(ideal)));
        }
    }
    properties.push(PropertyResult {
        name: "radical invariance on shared degrees and cd",
        checked: ideals.len(),
        failures,
    });

    Ok(SuiteReport {
        config_summary: format!(
            "seed={} count={} max_m={} max_n={}",
            config.seed, config.count, config.max_m, config.max_n
        ),
        properties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let report = run_suite(&SuiteConfig::default()).unwrap();
        for p in &report.properties {
            assert!(
                p.passed(),
                "property {:?} failed: {:?}",
                p.name,
                p.failures
            );
        }
        assert!(report.passed());
    }

    #[test]
    fn suite_is_deterministic() {
        let config = SuiteConfig {
            seed: 7,
            count: 25,
            max_m: 2,
            max_n: 3,
        };
        let a = run_suite(&config).unwrap();
        let b = run_suite(&config).unwrap();
        let summarize = |r: &SuiteReport| {
            r.properties
                .iter()
                .map(|p| (p.name, p.checked, p.failures.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(summarize(&a), summarize(&b));
    }

    #[test]
    fn pure_w_bounds_degenerate_to_classical_checks() {
        let config = SuiteConfig {
            seed: 3,
            count: 40,
            max_m: 0,
            max_n: 4,
        };
        let report = run_suite(&config).unwrap();
        assert!(report.passed(), "{:#?}", report.properties);
    }

    #[test]
    fn generators_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let c = random_complex(&mut rng, 2, 3);
            assert!(c.ground().m() <= 2 && (1..=3).contains(&c.ground().n()));
            assert!(!c.is_void());
            let i = random_monomial_ideal(&mut rng, 2, 3);
            assert!(!i.is_unit());
            assert!(i
                .generators()
                .iter()
                .all(|g| g.x.iter().chain(&g.y).all(|&e| e <= 3)));
        }
    }
}
