//! Bipartitioned ground sets, faces and simplicial complexes.
//!
//! The ground set is split into x-vertices `V` (indices `0..m`) and
//! y-vertices `W` (indices `m..m+n`), fixing the bigrading of the ambient
//! polynomial ring. Faces are bit sets over the ground set; complexes are
//! stored by their facets. The void complex (no faces at all) is a distinct
//! value from the empty complex `{∅}`.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Hard cap on the ground-set size so faces fit in a `u64` and full subset
/// enumerations stay tractable.
pub const MAX_GROUND: usize = 24;

/// The partitioned vertex set: `m` x-vertices followed by `n` y-vertices.
/// The partition is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiGround {
    m: usize,
    n: usize,
    x_names: Option<Vec<String>>,
    y_names: Option<Vec<String>>,
}

impl BiGround {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::EmptyGround);
        }
        if m + n > MAX_GROUND {
            return Err(Error::GroundTooLarge {
                size: m + n,
                max: MAX_GROUND,
            });
        }
        Ok(BiGround {
            m,
            n,
            x_names: None,
            y_names: None,
        })
    }

    pub fn with_names(m: usize, n: usize, x_names: Vec<String>, y_names: Vec<String>) -> Result<Self> {
        let mut g = Self::new(m, n)?;
        if x_names.len() != m || y_names.len() != n {
            return Err(Error::Document(format!(
                "vertex name lists have lengths {}/{}, expected {}/{}",
                x_names.len(),
                y_names.len(),
                m,
                n
            )));
        }
        g.x_names = Some(x_names);
        g.y_names = Some(y_names);
        Ok(g)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn is_x_vertex(&self, index: usize) -> bool {
        index < self.m
    }

    /// Mask of all x-vertices (the set V).
    pub fn v_mask(&self) -> Face {
        Face(((1u64 << self.m) - 1) as u64)
    }

    /// Mask of all y-vertices (the set W).
    pub fn w_mask(&self) -> Face {
        let all = (1u64 << self.size()) - 1;
        Face(all & !self.v_mask().0)
    }

    pub fn full_mask(&self) -> Face {
        Face((1u64 << self.size()) - 1)
    }

    pub fn vertex_name(&self, index: usize) -> String {
        if index < self.m {
            match &self.x_names {
                Some(names) => names[index].clone(),
                None => format!("v{}", index + 1),
            }
        } else {
            let j = index - self.m;
            match &self.y_names {
                Some(names) => names[j].clone(),
                None => format!("w{}", j + 1),
            }
        }
    }

    pub fn resolve_name(&self, name: &str) -> Option<usize> {
        (0..self.size()).find(|&i| self.vertex_name(i) == name)
    }

    /// Swaps the roles of V and W: x-vertex `i` becomes y-vertex `i` of the
    /// new ground and vice versa.
    pub fn transposed(&self) -> BiGround {
        BiGround {
            m: self.n,
            n: self.m,
            x_names: self.y_names.clone(),
            y_names: self.x_names.clone(),
        }
    }

    pub fn check_face(&self, face: Face) -> Result<()> {
        if face.0 >> self.size() != 0 {
            let index = (0..64).rev().find(|&i| face.0 >> i & 1 == 1).unwrap();
            return Err(Error::VertexOutOfRange {
                index,
                size: self.size(),
            });
        }
        Ok(())
    }
}

/// A face: a finite set of vertex indices, stored as a bit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub fn empty() -> Face {
        Face(0)
    }

    pub fn singleton(v: usize) -> Face {
        Face(1u64 << v)
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Face {
        let mut bits = 0u64;
        for v in members {
            bits |= 1u64 << v;
        }
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn members(self) -> Vec<usize> {
        (0..64).filter(|&i| self.0 >> i & 1 == 1).collect()
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension `|F| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.cardinality() as i64 - 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersect(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn is_disjoint_from(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    /// All subsets of this face, the face itself included.
    pub fn subsets(self) -> Vec<Face> {
        let mut out = Vec::with_capacity(1 << self.cardinality());
        // standard subset-of-mask walk
        let mask = self.0;
        let mut sub = 0u64;
        loop {
            out.push(Face(sub));
            if sub == mask {
                break;
            }
            sub = (sub.wrapping_sub(mask)) & mask;
        }
        out
    }

    /// Sort key: by cardinality, then by the sorted member tuple.
    pub fn order_key(self) -> (usize, Vec<usize>) {
        (self.cardinality(), self.members())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.members().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Dimension of a complex: a finite integer, or minus infinity for the void
/// complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dim {
    MinusInfinity,
    Finite(i64),
}

impl Dim {
    pub fn finite(self) -> Option<i64> {
        match self {
            Dim::MinusInfinity => None,
            Dim::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::MinusInfinity => write!(f, "-inf"),
            Dim::Finite(d) => write!(f, "{}", d),
        }
    }
}

/// A simplicial complex on a bipartitioned ground set, represented by its
/// facets. Construction canonicalizes the facet list: duplicates and
/// dominated facets are dropped, so facets are pairwise incomparable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: BiGround,
    facets: Vec<Face>,
    void: bool,
}

fn canonical_facets(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.cardinality()));
    let mut facets: Vec<Face> = Vec::new();
    for f in faces {
        if !facets.iter().any(|g| f.is_subset_of(*g)) {
            facets.push(f);
        }
    }
    facets.sort_by_key(|f| f.order_key());
    facets
}

impl SimplicialComplex {
    /// Builds a complex from a facet list. An empty list yields the empty
    /// complex `{∅}`, not the void complex.
    pub fn new(ground: BiGround, facets: Vec<Face>) -> Result<Self> {
        for f in &facets {
            ground.check_face(*f)?;
        }
        let mut facets = canonical_facets(facets);
        if facets.is_empty() {
            facets.push(Face::empty());
        }
        Ok(SimplicialComplex {
            ground,
            facets,
            void: false,
        })
    }

    /// The void complex: no faces at all, not even the empty face.
    pub fn void(ground: BiGround) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
            void: true,
        }
    }

    /// The full simplex on the whole ground set.
    pub fn full_simplex(ground: BiGround) -> Self {
        let top = ground.full_mask();
        SimplicialComplex {
            ground,
            facets: vec![top],
            void: false,
        }
    }

    pub fn ground(&self) -> &BiGround {
        &self.ground
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// True for the empty complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        !self.void && self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn contains_face(&self, face: Face) -> bool {
        !self.void && self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    pub fn dim(&self) -> Dim {
        if self.void {
            Dim::MinusInfinity
        } else {
            Dim::Finite(self.facets.iter().map(|f| f.dim()).max().unwrap())
        }
    }

    /// Vertices actually used by some face.
    pub fn vertex_set(&self) -> Face {
        self.facets
            .iter()
            .fold(Face::empty(), |acc, f| acc.union(*f))
    }

    /// The subcomplex of faces contained in `s`, on the same ground set.
    pub fn restrict(&self, s: Face) -> Result<SimplicialComplex> {
        self.ground.check_face(s)?;
        if self.void {
            return Ok(self.clone());
        }
        let restricted: Vec<Face> = self.facets.iter().map(|f| f.intersect(s)).collect();
        SimplicialComplex::new(self.ground.clone(), restricted)
    }

    /// Restriction to the y-vertices, written `Δ_W`.
    pub fn restrict_to_w(&self) -> SimplicialComplex {
        self.restrict(self.ground.w_mask()).expect("W is within the ground set")
    }

    /// Restriction to the x-vertices, `Δ_V`.
    pub fn restrict_to_v(&self) -> SimplicialComplex {
        self.restrict(self.ground.v_mask()).expect("V is within the ground set")
    }

    /// `link_Δ F = { G : F ∪ G ∈ Δ, F ∩ G = ∅ }`; the void complex when
    /// `F ∉ Δ`.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex> {
        self.ground.check_face(face)?;
        if !self.contains_face(face) {
            return Ok(SimplicialComplex::void(self.ground.clone()));
        }
        let link_facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| f.minus(face))
            .collect();
        SimplicialComplex::new(self.ground.clone(), link_facets)
    }

    /// `star_Δ F = { G : F ∪ G ∈ Δ }`; void when `F ∉ Δ`.
    pub fn star(&self, face: Face) -> Result<SimplicialComplex> {
        self.ground.check_face(face)?;
        if !self.contains_face(face) {
            return Ok(SimplicialComplex::void(self.ground.clone()));
        }
        let star_facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .copied()
            .collect();
        SimplicialComplex::new(self.ground.clone(), star_facets)
    }

    pub fn is_pure(&self) -> bool {
        if self.void {
            return true;
        }
        let c = self.facets[0].cardinality();
        self.facets.iter().all(|f| f.cardinality() == c)
    }

    /// Facet-chain connectivity: consecutive facets of the chain must share a
    /// vertex. Errors on the void complex.
    pub fn is_connected(&self) -> Result<bool> {
        if self.void {
            return Err(Error::VoidComplex);
        }
        let k = self.facets.len();
        let mut seen = vec![false; k];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if !seen[j] && !self.facets[i].is_disjoint_from(self.facets[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        Ok(seen.iter().all(|&s| s))
    }

    /// All faces of dimension `k` (so cardinality `k + 1`), sorted.
    pub fn faces_of_dim(&self, k: i64) -> Vec<Face> {
        self.all_faces()
            .into_iter()
            .filter(|f| f.dim() == k)
            .collect()
    }

    /// Every face, the empty face included, sorted by (cardinality, members).
    pub fn all_faces(&self) -> Vec<Face> {
        if self.void {
            return Vec::new();
        }
        let mut set: BTreeSet<u64> = BTreeSet::new();
        for f in &self.facets {
            for sub in f.subsets() {
                set.insert(sub.bits());
            }
        }
        let mut faces: Vec<Face> = set.into_iter().map(Face).collect();
        faces.sort_by_key(|f| f.order_key());
        faces
    }

    /// The complex on the transposed ground set, with V and W exchanged.
    pub fn transposed(&self) -> SimplicialComplex {
        let ground = self.ground.transposed();
        let m = self.ground.m;
        let n = self.ground.n;
        let remap = |f: &Face| {
            Face::from_members(f.members().into_iter().map(|v| {
                if v < m {
                    n + v // old x-vertex -> new y-vertex
                } else {
                    v - m // old y-vertex -> new x-vertex
                }
            }))
        };
        let facets = self.facets.iter().map(remap).collect();
        SimplicialComplex {
            ground,
            facets,
            void: self.void,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex13_n2() -> SimplicialComplex {
        // facets {v1,w1}, {v2,w2} on m = n = 2
        let g = BiGround::new(2, 2).unwrap();
        SimplicialComplex::new(
            g,
            vec![Face::from_members([0, 2]), Face::from_members([1, 3])],
        )
        .unwrap()
    }

    #[test]
    fn restrict_to_w_of_example() {
        let d = ex13_n2();
        let dw = d.restrict_to_w();
        assert_eq!(dw.facets(), &[Face::singleton(2), Face::singleton(3)]);
    }

    #[test]
    fn restrict_to_full_ground_is_identity() {
        let d = ex13_n2();
        let r = d.restrict(d.ground().full_mask()).unwrap();
        assert_eq!(r, d);
    }

    #[test]
    fn restrict_missing_everything_gives_empty_complex() {
        let g = BiGround::new(2, 2).unwrap();
        let d = SimplicialComplex::new(g.clone(), vec![Face::from_members([0, 1])]).unwrap();
        let r = d.restrict(g.w_mask()).unwrap();
        assert!(r.is_empty_complex());
        assert_eq!(r.dim(), Dim::Finite(-1));
    }

    #[test]
    fn link_of_vertex() {
        let d = ex13_n2();
        let l = d.link(Face::singleton(2)).unwrap();
        assert_eq!(l.facets(), &[Face::singleton(0)]);
    }

    #[test]
    fn link_of_empty_face_is_identity() {
        let d = ex13_n2();
        assert_eq!(d.link(Face::empty()).unwrap(), d);
    }

    #[test]
    fn link_of_non_face_is_void() {
        let d = ex13_n2();
        let l = d.link(Face::from_members([0, 1])).unwrap();
        assert!(l.is_void());
        assert_eq!(l.dim(), Dim::MinusInfinity);
    }

    #[test]
    fn star_of_vertex() {
        let d = ex13_n2();
        let s = d.star(Face::singleton(2)).unwrap();
        assert_eq!(s.facets(), &[Face::from_members([0, 2])]);
        assert_eq!(d.star(Face::empty()).unwrap(), d);
        assert!(d.star(Face::from_members([0, 1])).unwrap().is_void());
    }

    #[test]
    fn dim_and_purity() {
        let d = ex13_n2();
        assert_eq!(d.dim(), Dim::Finite(1));
        assert!(d.is_pure());
        assert!(!d.is_connected().unwrap());

        let g = BiGround::new(0, 3).unwrap();
        let single = SimplicialComplex::new(g.clone(), vec![g.full_mask()]).unwrap();
        assert!(single.is_pure());
        assert!(single.is_connected().unwrap());

        let mixed = SimplicialComplex::new(
            g.clone(),
            vec![Face::from_members([0, 1]), Face::singleton(2)],
        )
        .unwrap();
        assert!(!mixed.is_pure());
    }

    #[test]
    fn void_ordering() {
        assert!(Dim::MinusInfinity < Dim::Finite(-1));
        let g = BiGround::new(1, 1).unwrap();
        assert!(SimplicialComplex::void(g).is_void());
    }

    #[test]
    fn canonicalization_drops_dominated_facets() {
        let g = BiGround::new(2, 2).unwrap();
        let d = SimplicialComplex::new(
            g,
            vec![
                Face::singleton(0),
                Face::from_members([0, 2]),
                Face::from_members([0, 2]),
            ],
        )
        .unwrap();
        assert_eq!(d.facets(), &[Face::from_members([0, 2])]);
    }

    #[test]
    fn is_connected_rejects_void() {
        let g = BiGround::new(1, 1).unwrap();
        assert!(SimplicialComplex::void(g).is_connected().is_err());
    }

    #[test]
    fn out_of_range_vertex_rejected() {
        let g = BiGround::new(1, 1).unwrap();
        assert!(SimplicialComplex::new(g, vec![Face::singleton(5)]).is_err());
    }
}
