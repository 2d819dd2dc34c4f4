//! The dictionary between squarefree bigraded monomial ideals and simplicial
//! complexes: Stanley-Reisner ideal, facet primes, and the facet-based
//! oracles for cohomological dimension and relative unmixedness.
//!
//! Squarefree monomials are encoded as faces (their supports); the associated
//! primes of `K[Δ]` are computed as facet complements, never by generic
//! primary decomposition.

use crate::complex::{BiGround, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// The prime ideal `𝔭_F` of a facet `F`: generated by the variables whose
/// vertices are absent from `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetPrime {
    pub facet: Face,
    /// Indices into V of the missing x-variables.
    pub missing_x: Vec<usize>,
    /// Indices into W (0-based within W) of the missing y-variables.
    pub missing_y: Vec<usize>,
}

impl FacetPrime {
    /// `dim S/𝔭_F = |F|`.
    pub fn quotient_dim(&self) -> usize {
        self.facet.cardinality()
    }
}

/// Minimal generators of the Stanley-Reisner ideal `I_Δ`: the minimal
/// non-faces of `Δ`, each given by its support.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<Vec<Face>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let size = complex.ground().size();
    let mut gens = Vec::new();
    for bits in 0u64..(1u64 << size) {
        let f = Face::from_members((0..size).filter(|&i| bits >> i & 1 == 1));
        if complex.contains_face(f) {
            continue;
        }
        let minimal = f
            .members()
            .into_iter()
            .all(|v| complex.contains_face(f.minus(Face::singleton(v))));
        if minimal {
            gens.push(f);
        }
    }
    gens.sort_by_key(|f| f.order_key());
    Ok(gens)
}

/// Inverse of [`stanley_reisner_ideal`]: the complex whose faces are the
/// squarefree monomials not divisible by any generator. A generator equal to
/// `1` (empty support) describes the unit ideal and yields the void complex.
pub fn complex_of_squarefree_ideal(gens: &[Face], ground: BiGround) -> Result<SimplicialComplex> {
    for g in gens {
        ground.check_face(*g)?;
    }
    if gens.iter().any(|g| g.is_empty()) {
        return Ok(SimplicialComplex::void(ground));
    }
    let size = ground.size();
    let mut faces = Vec::new();
    for bits in 0u64..(1u64 << size) {
        let f = Face::from_members((0..size).filter(|&i| bits >> i & 1 == 1));
        if gens.iter().all(|g| !g.is_subset_of(f)) {
            faces.push(f);
        }
    }
    SimplicialComplex::new(ground, faces)
}

/// One `FacetPrime` per facet; these are exactly `Ass(K[Δ]) = Min(K[Δ])`.
pub fn facet_primes(complex: &SimplicialComplex) -> Result<Vec<FacetPrime>> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let ground = complex.ground();
    let m = ground.m();
    Ok(complex
        .facets()
        .iter()
        .map(|&facet| FacetPrime {
            facet,
            missing_x: (0..m).filter(|&i| !facet.contains(i)).collect(),
            missing_y: (0..ground.n())
                .filter(|&j| !facet.contains(m + j))
                .collect(),
        })
        .collect())
}

/// `cd(Q, K[Δ]) = dim Δ_W + 1`.
pub fn cd_q(complex: &SimplicialComplex) -> Result<i64> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    // Δ_W contains at least the empty face, so the dimension is finite.
    Ok(complex.restrict_to_w().dim().finite().unwrap() + 1)
}

/// `cd(P, K[Δ]) = dim Δ_V + 1`.
pub fn cd_p(complex: &SimplicialComplex) -> Result<i64> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(complex.restrict_to_v().dim().finite().unwrap() + 1)
}

/// Independent route to `cd(Q, K[Δ])`: the maximum of `cd(Q, S/𝔭_F)
/// = |F ∩ W|` over the associated primes.
pub fn cd_q_oracle(complex: &SimplicialComplex) -> Result<i64> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let w = complex.ground().w_mask();
    Ok(complex
        .facets()
        .iter()
        .map(|f| f.intersect(w).cardinality() as i64)
        .max()
        .unwrap())
}

pub fn cd_p_oracle(complex: &SimplicialComplex) -> Result<i64> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let v = complex.ground().v_mask();
    Ok(complex
        .facets()
        .iter()
        .map(|f| f.intersect(v).cardinality() as i64)
        .max()
        .unwrap())
}

/// Relative unmixedness with respect to Q: `cd(Q, S/𝔭_F)` is the same for
/// every facet, i.e. all facets meet W in the same number of vertices.
pub fn is_relative_unmixed_q(complex: &SimplicialComplex) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let w = complex.ground().w_mask();
    let first = complex.facets()[0].intersect(w).cardinality();
    Ok(complex
        .facets()
        .iter()
        .all(|f| f.intersect(w).cardinality() == first))
}

pub fn is_relative_unmixed_p(complex: &SimplicialComplex) -> Result<bool> {
    Ok(is_relative_unmixed_q(&complex.transposed())?)
}

/// Checks the associated-prime shape forced on complexes that are relative CM
/// with respect to P and relative unmixed with respect to Q: every facet
/// meets V in exactly `p = cd_P` vertices and W in exactly `q = cd_Q`
/// vertices. The precondition is the caller's responsibility; outside of it
/// the check simply reports whether the shape holds.
pub fn associated_prime_shape_check(complex: &SimplicialComplex) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let p = cd_p(complex)?;
    let q = cd_q(complex)?;
    let v = complex.ground().v_mask();
    let w = complex.ground().w_mask();
    Ok(complex.facets().iter().all(|f| {
        f.intersect(v).cardinality() as i64 == p && f.intersect(w).cardinality() as i64 == q
    }))
}
