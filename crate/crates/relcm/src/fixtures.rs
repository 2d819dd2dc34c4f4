//! Small named complexes used across the test suites.

use crate::complex::{BiGround, Face, SimplicialComplex};
use crate::error::Result;

/// The complex of `I = ⋂_{i=1}^n (x_i, y_i)` on `m = n` pairs of vertices:
/// one facet per `i`, the complement of `{v_i, w_i}`.
pub fn intersection_of_pairs(n: usize) -> Result<SimplicialComplex> {
    let ground = BiGround::new(n, n)?;
    let full = ground.full_mask();
    let facets = (0..n)
        .map(|i| full.minus(Face::from_members([i, n + i])))
        .collect();
    SimplicialComplex::new(ground, facets)
}

/// Hollow triangle (the circle) on three y-vertices.
pub fn hollow_triangle() -> SimplicialComplex {
    let g = BiGround::new(0, 3).unwrap();
    SimplicialComplex::new(
        g,
        vec![
            Face::from_members([0, 1]),
            Face::from_members([0, 2]),
            Face::from_members([1, 2]),
        ],
    )
    .unwrap()
}

/// The 6-vertex minimal triangulation of the real projective plane, on pure
/// y-vertices. Cohen-Macaulay over the rationals but not over F_2.
pub fn projective_plane() -> SimplicialComplex {
    let g = BiGround::new(0, 6).unwrap();
    let tri = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 1, 5],
        [1, 2, 4],
        [1, 3, 4],
        [1, 3, 5],
        [2, 3, 5],
        [2, 4, 5],
    ];
    SimplicialComplex::new(
        g,
        tri.iter()
            .map(|t| Face::from_members(t.iter().copied()))
            .collect(),
    )
    .unwrap()
}
