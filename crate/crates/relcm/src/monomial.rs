//! General (non-squarefree) bigraded monomial ideals.
//!
//! A monomial ideal is held by its unique minimal monomial generating set,
//! each generator split as `u = u₁u₂ = x^c y^d`. The exponent maxima
//! `σ_i = max ν_i(u₁)` and `ρ_j = max ν_j(u₂)` control everything: the
//! complexes `Δ_{(a,b)}(I)` whose reduced homology gives the fine graded
//! components of `H^i_Q(S/I)`, the finite representative grid of degrees
//! that determines the vanishing profile, and the regularity bound
//! `Σρ_j − n + q`. The relative Cohen-Macaulay decision itself is
//! radical-invariant and delegates to the Stanley-Reisner complex of `√I`.

use crate::complex::{BiGround, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldSpec};
use crate::local_cohomology::{BigradedDegree, CohomologyProfile, Witness};
use crate::stanley_reisner::complex_of_squarefree_ideal;
use std::collections::BTreeMap;

/// One monomial generator `x^c y^d`, exponent vectors over the two variable
/// blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialGenerator {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl MonomialGenerator {
    pub fn is_unit(&self) -> bool {
        self.x.iter().all(|&e| e == 0) && self.y.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &MonomialGenerator) -> bool {
        self.x.iter().zip(&other.x).all(|(a, b)| a <= b)
            && self.y.iter().zip(&other.y).all(|(a, b)| a <= b)
    }

    /// Support of the generator as a face on the combined ground set with
    /// `m` x-vertices.
    pub fn support(&self, m: usize) -> Face {
        let xs = self.x.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i);
        let ys = self
            .y
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| m + j);
        Face::from_members(xs.chain(ys))
    }
}

/// A monomial ideal in minimal form, with the σ/ρ exponent thresholds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ground: BiGround,
    generators: Vec<MonomialGenerator>,
    sigma: Vec<u32>,
    rho: Vec<u32>,
}

impl MonomialIdeal {
    /// Builds the ideal, dropping generators divisible by another (so the
    /// stored list is the unique minimal generating set) and computing σ, ρ.
    /// An empty list is the zero ideal.
    pub fn new(ground: BiGround, generators: Vec<MonomialGenerator>) -> Result<MonomialIdeal> {
        let (m, n) = (ground.m(), ground.n());
        for g in &generators {
            if g.x.len() != m {
                return Err(Error::DegreeLengthMismatch {
                    expected: m,
                    got: g.x.len(),
                });
            }
            if g.y.len() != n {
                return Err(Error::DegreeLengthMismatch {
                    expected: n,
                    got: g.y.len(),
                });
            }
        }
        let mut minimal: Vec<MonomialGenerator> = Vec::new();
        for g in generators {
            if minimal.iter().any(|h| h.divides(&g)) {
                continue;
            }
            minimal.retain(|h| !g.divides(h));
            minimal.push(g);
        }
        minimal.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));
        let sigma = (0..m)
            .map(|i| minimal.iter().map(|g| g.x[i]).max().unwrap_or(0))
            .collect();
        let rho = (0..n)
            .map(|j| minimal.iter().map(|g| g.y[j]).max().unwrap_or(0))
            .collect();
        Ok(MonomialIdeal {
            ground,
            generators: minimal,
            sigma,
            rho,
        })
    }

    pub fn ground(&self) -> &BiGround {
        &self.ground
    }

    pub fn generators(&self) -> &[MonomialGenerator] {
        &self.generators
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_unit())
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.x.iter().chain(&g.y).all(|&e| e <= 1))
    }

    /// `√I`: exponents capped at 1, re-minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| MonomialGenerator {
                x: g.x.iter().map(|&e| e.min(1)).collect(),
                y: g.y.iter().map(|&e| e.min(1)).collect(),
            })
            .collect();
        MonomialIdeal::new(self.ground.clone(), gens).expect("lengths preserved")
    }

    /// The Stanley-Reisner complex of `√I`; void for the unit ideal.
    pub fn radical_complex(&self) -> Result<SimplicialComplex> {
        let m = self.ground.m();
        let supports: Vec<Face> = self.radical().generators.iter().map(|g| g.support(m)).collect();
        complex_of_squarefree_ideal(&supports, self.ground.clone())
    }
}

/// The complex `Δ_{(a,b)}(I)` on the y-vertices: faces are `L ∖ G_b` over
/// all `L ⊆ [n]` with `G_b = {j : b_j < 0} ⊆ L` such that every generator
/// `u` has some `j ∉ L` with `ν_j(u₂) > b_j`, or some `i` with
/// `ν_i(u₁) > a_i`. Void when no `L` qualifies.
pub fn delta_ab(ideal: &MonomialIdeal, degree: &BigradedDegree) -> Result<SimplicialComplex> {
    let (m, n) = (ideal.ground.m(), ideal.ground.n());
    degree.check_lengths(m, n)?;
    if degree.a.iter().any(|&v| v < 0) {
        return Err(Error::DegreeOutsideCone("a must be nonnegative"));
    }
    let w_ground = BiGround::new(0, n)?;
    let g_b = Face::from_members(
        degree
            .b
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < 0)
            .map(|(j, _)| j),
    );
    let full = w_ground.full_mask();
    let mut faces = Vec::new();
    let mut any_valid = false;
    for rest in full.minus(g_b).subsets() {
        let l = g_b.union(rest);
        let ok = ideal.generators.iter().all(|u| {
            let x_escape = (0..m).any(|i| u.x[i] as i64 > degree.a[i]);
            let y_escape = (0..n).any(|j| !l.contains(j) && u.y[j] as i64 > degree.b[j]);
            x_escape || y_escape
        });
        if ok {
            any_valid = true;
            faces.push(l.minus(g_b));
        }
    }
    if !any_valid {
        return Ok(SimplicialComplex::void(w_ground));
    }
    SimplicialComplex::new(w_ground, faces)
}

/// `dim_K H^i_Q(S/I)_{(a,b)}`: zero when some `a_i < 0` (the quotient is
/// x-nonnegatively graded); otherwise the reduced homology of
/// `Δ_{(a,b)}(I)` in degree `i − |G_b| − 1`.
///
/// The fine slice of the Čech complex on `y_1..y_n` has its `L`-spot
/// nonzero exactly when `G_b ⊆ L` and no generator divides the slice
/// monomial after inverting `y_L` — which is the defining condition of
/// `Δ_{(a,b)}(I)`, so the formula is valid for every `b ∈ ℤ^n`, with no
/// σ/ρ window restriction. When some `b_j ≥ ρ_j` the complex is a cone
/// with apex `j` (or void) and the component duly vanishes.
pub fn component_dim_monomial(
    ideal: &MonomialIdeal,
    i: i64,
    degree: &BigradedDegree,
    field: FieldSpec,
) -> Result<usize> {
    let (m, n) = (ideal.ground.m(), ideal.ground.n());
    degree.check_lengths(m, n)?;
    if degree.a.iter().any(|&v| v < 0) {
        return Ok(0);
    }
    let complex = delta_ab(ideal, degree)?;
    let g_b = degree.b.iter().filter(|&&v| v < 0).count() as i64;
    let h = reduced_homology(&complex, field);
    Ok(h.dim_at(i - g_b - 1))
}

/// The finite representative degree grid. `Δ_{(a,b)}(I)` depends on `(a, b)`
/// only through the comparisons `ν_i(u₁) > a_i`, `ν_j(u₂) > b_j` (for
/// `b_j ≥ 0`) and the sign set `G_b`, so per coordinate it suffices to take
/// `a_i` over `{0} ∪ {distinct positive x_i-exponents}` and `b_j` over
/// `{−1, 0} ∪ {distinct positive y_j-exponents below ρ_j}`; all `b_j ≥ ρ_j`
/// give vanishing components and are omitted.
pub fn representative_degrees(ideal: &MonomialIdeal) -> Vec<BigradedDegree> {
    let (m, n) = (ideal.ground.m(), ideal.ground.n());
    let a_choices: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            let mut vals: Vec<i64> = ideal
                .generators
                .iter()
                .map(|g| g.x[i] as i64)
                .chain(std::iter::once(0))
                .collect();
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect();
    let b_choices: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let rho = ideal.rho[j] as i64;
            let mut vals: Vec<i64> = ideal
                .generators
                .iter()
                .map(|g| g.y[j] as i64)
                .filter(|&e| e < rho)
                .chain([-1, 0])
                .collect();
            vals.sort_unstable();
            vals.dedup();
            vals
        })
        .collect();
    let mut degrees = vec![BigradedDegree::new(Vec::new(), Vec::new())];
    for choices in a_choices {
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
    for choices in b_choices {
        degrees = degrees
            .into_iter()
            .flat_map(|d| {
                choices.iter().map(move |&v| {
                    let mut b = d.b.clone();
                    b.push(v);
                    BigradedDegree::new(d.a.clone(), b)
                })
            })
            .collect();
    }
    degrees
}

/// Vanishing profile of `H^•_Q(S/I)` by exhausting the representative grid.
pub fn vanishing_profile_monomial(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<CohomologyProfile> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let m = ideal.ground.m();
    let mut witnesses = BTreeMap::new();
    for degree in representative_degrees(ideal) {
        let complex = delta_ab(ideal, &degree)?;
        let g_b = Face::from_members(
            degree
                .b
                .iter()
                .enumerate()
                .filter(|(_, &v)| v < 0)
                .map(|(j, _)| m + j),
        );
        let n_a = Face::from_members(
            degree
                .a
                .iter()
                .enumerate()
                .filter(|(_, &v)| v > 0)
                .map(|(i, _)| i),
        );
        let h = reduced_homology(&complex, field);
        for (hd, _) in h.entries() {
            let i = hd + g_b.cardinality() as i64 + 1;
            witnesses.entry(i).or_insert(Witness {
                f: g_b,
                g: n_a,
                homology_degree: hd,
            });
        }
    }
    Ok(CohomologyProfile::from_witnesses(field, witnesses))
}

/// Relative Cohen-Macaulayness of `S/I` with respect to Q: exactly one
/// nonvanishing `H^i_Q(S/I)`, decided on the vanishing profile of `I`
/// itself. Returns `Some(q)` on success.
///
/// The decision is deliberately NOT delegated to the complex of `√I`: the
/// relative-CM property is not radical-invariant. For
/// `I = (x₁²x₂, x₁y₂³, x₂y₁, y₁²y₂²)` the radical quotient is relative CM
/// while `x₁x₂` is a nonzero Q-torsion class of `S/I`, so `H^0_Q(S/I) ≠ 0`
/// and `S/I` is not. What is radical-invariant is the cohomological
/// dimension, and that is cross-checked here.
pub fn is_relative_cm_monomial(
    ideal: &MonomialIdeal,
    field: FieldSpec,
) -> Result<Option<i64>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let profile = vanishing_profile_monomial(ideal, field)?;
    let top = profile
        .max_index()
        .ok_or_else(|| Error::CrossCheckFailed("empty vanishing profile".into()))?;
    let radical_cd = crate::stanley_reisner::cd_q(&ideal.radical_complex()?)?;
    if top != radical_cd {
        return Err(Error::CrossCheckFailed(format!(
            "profile tops out at {top} but the radical gives cd_Q = {radical_cd}"
        )));
    }
    Ok(if profile.is_singleton() { Some(top) } else { None })
}

/// The bound `reg(S/I) ≤ Σ_j ρ_j − n + q`. Requires relative
/// Cohen-Macaulayness (that is the corollary's hypothesis).
pub fn regularity_bound(ideal: &MonomialIdeal, field: FieldSpec) -> Result<i64> {
    let Some(q) = is_relative_cm_monomial(ideal, field)? else {
        return Err(Error::NotRelativeCm);
    };
    let n = ideal.ground.n() as i64;
    Ok(ideal.rho.iter().map(|&r| r as i64).sum::<i64>() - n + q)
}
