//! Relative Cohen-Macaulayness of bigraded Stanley-Reisner and monomial
//! quotient rings.
//!
//! The polynomial ring `S = K[x_1..x_m, y_1..y_n]` carries the fine
//! `ℤ^m × ℤ^n` grading; `Q = (y_1..y_n)` and `P = (x_1..x_m)` are the two
//! irrelevant ideals. For a squarefree monomial ideal the quotient is the
//! Stanley-Reisner ring of a complex on a partitioned vertex set, and the
//! local cohomology `H^i_Q(K[Δ])` is computed degree by degree from reduced
//! simplicial homology of restricted links. Everything downstream of that —
//! vanishing profiles, grade, the relative Cohen-Macaulay decision, graded
//! Krull dimensions, a-invariants, the non-squarefree reduction and the
//! hypersurface predicates — is exact.

pub mod complex;
pub mod doc;
pub mod error;
pub mod fixtures;
pub mod homology;
pub mod hypersurface;
pub mod local_cohomology;
pub mod monomial;
pub mod stanley_reisner;
pub mod suite;

pub use complex::{BiGround, Dim, Face, SimplicialComplex, MAX_GROUND};
pub use error::{Error, Result};
pub use homology::{reduced_homology, FieldSpec, HomologyVector};
pub use local_cohomology::{
    component_dim, grade_q, hochster_terms, is_relative_cm_q, vanishing_profile, BigradedDegree,
    CohomologyProfile,
};
