//! Hypersurface quotients `R = S/fS` for a bihomogeneous form `f`:
//! finite generation and Artinianness of `H^{n-1}_Q(R)` and `H^n_Q(R)`.
//!
//! The decidable fragment is forms whose y-coefficients are monomials (times
//! a nonzero scalar); everything then reduces to exponent combinatorics of
//! the content ideal `c(f) ⊆ K[x]`. Scalars are carried only as nonzero
//! markers — none of the predicates here depend on their values or on the
//! characteristic.

use crate::complex::BiGround;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// One term of a form: a nonzero scalar marker with its x- and y-exponent
/// vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormTerm {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

/// A nonzero bihomogeneous form of declared bidegree `(a, b)`; every term
/// has total x-degree `a` and total y-degree `b`, and exponent pairs are
/// distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BihomogeneousForm {
    ground: BiGround,
    bidegree: (u32, u32),
    terms: Vec<FormTerm>,
}

impl BihomogeneousForm {
    pub fn new(
        ground: BiGround,
        bidegree: (u32, u32),
        terms: Vec<FormTerm>,
    ) -> Result<BihomogeneousForm> {
        if terms.is_empty() {
            return Err(Error::ZeroForm);
        }
        let (m, n) = (ground.m(), ground.n());
        for t in &terms {
            if t.x.len() != m {
                return Err(Error::DegreeLengthMismatch {
                    expected: m,
                    got: t.x.len(),
                });
            }
            if t.y.len() != n {
                return Err(Error::DegreeLengthMismatch {
                    expected: n,
                    got: t.y.len(),
                });
            }
            let (da, db) = (t.x.iter().sum::<u32>(), t.y.iter().sum::<u32>());
            if (da, db) != bidegree {
                return Err(Error::BidegreeMismatch(bidegree.0, bidegree.1));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for t in &terms {
            if !seen.insert((t.x.clone(), t.y.clone())) {
                return Err(Error::DuplicateTerm);
            }
        }
        Ok(BihomogeneousForm {
            ground,
            bidegree,
            terms,
        })
    }

    pub fn ground(&self) -> &BiGround {
        &self.ground
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.bidegree
    }

    pub fn terms(&self) -> &[FormTerm] {
        &self.terms
    }
}

/// The content ideal `c(f) ⊆ K[x]`, in the decidable fragment where each
/// y-monomial of `f` carries a single x-monomial coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentIdeal {
    /// Minimal monomial generators, as x-exponent vectors. Empty when
    /// `supported` is false.
    pub generators: Vec<Vec<u32>>,
    /// False when some y-coefficient of `f` is a sum of several monomials.
    pub supported: bool,
}

/// Groups the terms of `f` by y-monomial; each single-term group contributes
/// its x-monomial as a generator. A group with several terms means a genuine
/// polynomial coefficient and the fragment does not apply.
pub fn content_ideal(f: &BihomogeneousForm) -> ContentIdeal {
    let mut by_y: BTreeMap<&[u32], Vec<&FormTerm>> = BTreeMap::new();
    for t in f.terms() {
        by_y.entry(&t.y).or_default().push(t);
    }
    if by_y.values().any(|group| group.len() > 1) {
        return ContentIdeal {
            generators: Vec::new(),
            supported: false,
        };
    }
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for group in by_y.values() {
        let cand = group[0].x.clone();
        if gens
            .iter()
            .any(|g| g.iter().zip(&cand).all(|(a, b)| a <= b))
        {
            continue;
        }
        gens.retain(|g| !cand.iter().zip(g).all(|(a, b)| a <= b));
        gens.push(cand);
    }
    gens.sort();
    ContentIdeal {
        generators: gens,
        supported: true,
    }
}

/// Whether `c(f)` is `P₀`-primary: its radical is the full `(x₁..x_m)`,
/// i.e. every variable appears as a pure power among the generators, and a
/// monomial ideal with maximal radical is automatically primary.
pub fn is_p0_primary(content: &ContentIdeal, m: usize) -> Result<bool> {
    if !content.supported {
        return Err(Error::UnsupportedContent);
    }
    Ok((0..m).all(|i| {
        content
            .generators
            .iter()
            .any(|g| g[i] > 0 && g.iter().enumerate().all(|(k, &e)| k == i || e == 0))
    }))
}

/// Three-valued outcome of the `H^n_Q(R)` Artinianness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArtinianVerdict {
    Artinian,
    NotArtinian { reason: String },
    /// The necessary condition holds but no sufficiency is available for
    /// `m ≥ 2`.
    Inconclusive,
    /// Some y-coefficient is a proper polynomial; outside the decidable
    /// fragment.
    UnsupportedCoefficients,
}

/// Finite-generation status of `H^{n-1}_Q(R)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FinitenessVerdict {
    NotFinitelyGenerated,
    /// `n < 2`: the statement's hypothesis does not apply.
    Degenerate,
}

/// The full report on `R = S/fS`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinianReport {
    pub h_n_minus_1_finitely_generated: FinitenessVerdict,
    pub h_n_minus_1_artinian: bool,
    pub h_n_artinian: ArtinianVerdict,
    pub content: ContentIdeal,
}

/// Verdicts for `R = S/fS`:
/// `H^{n-1}_Q(R)` is never finitely generated for `n ≥ 2` and is Artinian
/// exactly when `m = 0`; `H^n_Q(R)` is Artinian whenever `m ≤ 1`, and for
/// `m ≥ 2` Artinianness forces `c(f)` to be `P₀`-primary without being a
/// system of parameters — a necessary condition only, so the positive case
/// stays inconclusive.
pub fn artinian_report(f: &BihomogeneousForm) -> ArtinianReport {
    let (m, n) = (f.ground().m(), f.ground().n());
    let content = content_ideal(f);
    let h_fg = if n >= 2 {
        FinitenessVerdict::NotFinitelyGenerated
    } else {
        FinitenessVerdict::Degenerate
    };
    let h_n_artinian = if m <= 1 {
        ArtinianVerdict::Artinian
    } else if !content.supported {
        ArtinianVerdict::UnsupportedCoefficients
    } else {
        let primary = is_p0_primary(&content, m).expect("content is supported");
        if !primary {
            ArtinianVerdict::NotArtinian {
                reason: "the content ideal is not P0-primary".into(),
            }
        } else if content.generators.len() == m {
            // m minimal generators with full radical form a homogeneous
            // system of parameters, which rules Artinianness out
            ArtinianVerdict::NotArtinian {
                reason: "the content ideal is a system of parameters".into(),
            }
        } else {
            ArtinianVerdict::Inconclusive
        }
    };
    ArtinianReport {
        h_n_minus_1_finitely_generated: h_fg,
        h_n_minus_1_artinian: m == 0,
        h_n_artinian,
        content,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(x: &[u32], y: &[u32]) -> FormTerm {
        FormTerm {
            x: x.to_vec(),
            y: y.to_vec(),
        }
    }

    fn form(m: usize, n: usize, deg: (u32, u32), terms: &[(&[u32], &[u32])]) -> BihomogeneousForm {
        let g = BiGround::new(m, n).unwrap();
        BihomogeneousForm::new(g, deg, terms.iter().map(|(x, y)| term(x, y)).collect()).unwrap()
    }

    #[test]
    fn constructor_checks() {
        let g = BiGround::new(2, 2).unwrap();
        assert!(matches!(
            BihomogeneousForm::new(g.clone(), (2, 1), vec![]),
            Err(Error::ZeroForm)
        ));
        assert!(matches!(
            BihomogeneousForm::new(g.clone(), (2, 1), vec![term(&[1, 0], &[1, 0])]),
            Err(Error::BidegreeMismatch(2, 1))
        ));
        assert!(matches!(
            BihomogeneousForm::new(
                g,
                (2, 1),
                vec![term(&[2, 0], &[1, 0]), term(&[2, 0], &[1, 0])]
            ),
            Err(Error::DuplicateTerm)
        ));
    }

    #[test]
    fn content_of_monomial_coefficient_forms() {
        // f = x1^2 y1 + x1 x2 y2
        let f = form(2, 2, (2, 1), &[(&[2, 0], &[1, 0]), (&[1, 1], &[0, 1])]);
        let c = content_ideal(&f);
        assert!(c.supported);
        assert_eq!(c.generators, vec![vec![1, 1], vec![2, 0]]);

        // f = x^2 (y1 + y2), m = 1: common coefficient, one generator
        let f = form(1, 2, (2, 1), &[(&[2], &[1, 0]), (&[2], &[0, 1])]);
        let c = content_ideal(&f);
        assert_eq!(c.generators, vec![vec![2]]);

        // a repeated coefficient collapses to a single generator
        let f = form(2, 2, (2, 1), &[(&[2, 0], &[1, 0]), (&[2, 0], &[0, 1])]);
        let c = content_ideal(&f);
        assert_eq!(c.generators, vec![vec![2, 0]]);
    }

    #[test]
    fn content_rejects_polynomial_coefficients() {
        // f = (x1 + x2) y1
        let f = form(2, 1, (1, 1), &[(&[1, 0], &[1]), (&[0, 1], &[1])]);
        let c = content_ideal(&f);
        assert!(!c.supported);
        assert!(matches!(is_p0_primary(&c, 2), Err(Error::UnsupportedContent)));
    }

    #[test]
    fn primary_tests() {
        let not_primary = ContentIdeal {
            generators: vec![vec![1, 1], vec![2, 0]],
            supported: true,
        };
        assert!(!is_p0_primary(&not_primary, 2).unwrap());

        let single = ContentIdeal {
            generators: vec![vec![3]],
            supported: true,
        };
        assert!(is_p0_primary(&single, 1).unwrap());

        let sop = ContentIdeal {
            generators: vec![vec![0, 1], vec![3, 0]],
            supported: true,
        };
        assert!(is_p0_primary(&sop, 2).unwrap());
    }

    #[test]
    fn report_small_m() {
        // m = 1, f = x^2 (y1 + y2), n = 2
        let f = form(1, 2, (2, 1), &[(&[2], &[1, 0]), (&[2], &[0, 1])]);
        let r = artinian_report(&f);
        assert_eq!(r.h_n_artinian, ArtinianVerdict::Artinian);
        assert!(!r.h_n_minus_1_artinian);
        assert_eq!(
            r.h_n_minus_1_finitely_generated,
            FinitenessVerdict::NotFinitelyGenerated
        );

        // m = 0: Cohen-Macaulay of dimension n - 1, everything Artinian
        let f = form(0, 2, (0, 2), &[(&[], &[2, 0]), (&[], &[1, 1])]);
        let r = artinian_report(&f);
        assert!(r.h_n_minus_1_artinian);
        assert_eq!(r.h_n_artinian, ArtinianVerdict::Artinian);
    }

    #[test]
    fn report_m2_cases() {
        // not P0-primary -> not Artinian
        let f = form(2, 2, (2, 1), &[(&[2, 0], &[1, 0]), (&[1, 1], &[0, 1])]);
        let r = artinian_report(&f);
        assert!(matches!(r.h_n_artinian, ArtinianVerdict::NotArtinian { .. }));
        assert!(!r.h_n_minus_1_artinian);

        // P0-primary with exactly m = 2 minimal generators: system of
        // parameters, ruled out
        let f = form(2, 2, (2, 1), &[(&[2, 0], &[1, 0]), (&[0, 2], &[0, 1])]);
        let r = artinian_report(&f);
        assert!(matches!(r.h_n_artinian, ArtinianVerdict::NotArtinian { .. }));

        // P0-primary with three minimal generators: inconclusive
        let f = form(
            2,
            3,
            (2, 1),
            &[
                (&[2, 0], &[1, 0, 0]),
                (&[0, 2], &[0, 1, 0]),
                (&[1, 1], &[0, 0, 1]),
            ],
        );
        let r = artinian_report(&f);
        assert_eq!(r.h_n_artinian, ArtinianVerdict::Inconclusive);

        // polynomial coefficient with m >= 2
        let f = form(2, 1, (1, 1), &[(&[1, 0], &[1]), (&[0, 1], &[1])]);
        let r = artinian_report(&f);
        assert_eq!(r.h_n_artinian, ArtinianVerdict::UnsupportedCoefficients);
    }

    #[test]
    fn degenerate_low_n() {
        let f = form(1, 1, (1, 1), &[(&[1], &[1])]);
        let r = artinian_report(&f);
        assert_eq!(
            r.h_n_minus_1_finitely_generated,
            FinitenessVerdict::Degenerate
        );
    }

    #[test]
    fn report_invariance_under_permutation_and_rescaling() {
        // swapping the two x-variables and the two y-variables leaves every
        // verdict unchanged
        let f = form(2, 2, (2, 1), &[(&[2, 0], &[1, 0]), (&[1, 1], &[0, 1])]);
        let swapped = form(2, 2, (2, 1), &[(&[0, 2], &[0, 1]), (&[1, 1], &[1, 0])]);
        let (r1, r2) = (artinian_report(&f), artinian_report(&swapped));
        assert_eq!(r1.h_n_artinian, r2.h_n_artinian);
        assert_eq!(r1.h_n_minus_1_artinian, r2.h_n_minus_1_artinian);
    }
}
