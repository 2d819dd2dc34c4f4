//! Reduced simplicial homology over an exact field.
//!
//! Boundary matrices are built for the augmented chain complex, so the
//! `(-1)`-chains are one-dimensional (spanned by the empty face) and
//! `H̃_{-1}({∅}) = K`. All arithmetic is exact: arbitrary-precision
//! rationals or a prime field.

use crate::complex::{Dim, Face, SimplicialComplex};
use crate::error::{Error, Result};
use num::rational::BigRational;
use num::{BigInt, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// The coefficient field: the rationals, or F_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Parses the CLI spelling: `"q"` or `"fp:<prime>"`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::BadFieldSpec(s.to_string()))?;
            return FieldSpec::prime(p);
        }
        Err(Error::BadFieldSpec(s.to_string()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{}", p),
        }
    }
}

/// Dimensions of the reduced homology groups, indexed by degree. Degrees with
/// zero homology are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyVector {
    pub field: FieldSpec,
    by_degree: BTreeMap<i64, usize>,
}

impl HomologyVector {
    pub fn dim_at(&self, degree: i64) -> usize {
        self.by_degree.get(&degree).copied().unwrap_or(0)
    }

    pub fn nonzero_degrees(&self) -> Vec<i64> {
        self.by_degree.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.by_degree.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.by_degree.iter().map(|(&d, &v)| (d, v))
    }

    /// Alternating sum of homology dimensions, starting at degree -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.by_degree
            .iter()
            .map(|(&d, &v)| if d.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }
}

/// Sparse matrix with entries in {+1, -1}, the common shape of simplicial
/// boundary maps. Columns hold (row index, sign) pairs.
#[derive(Debug, Clone)]
pub struct SignMatrix {
    pub rows: usize,
    pub cols: usize,
    pub col_entries: Vec<Vec<(usize, i8)>>,
}

impl SignMatrix {
    fn zero(rows: usize, cols: usize) -> SignMatrix {
        SignMatrix {
            rows,
            cols,
            col_entries: vec![Vec::new(); cols],
        }
    }
}

/// Boundary map from `k`-chains to `(k-1)`-chains of the augmented chain
/// complex. Rows and columns are indexed by lexicographically sorted faces;
/// the sign of dropping the vertex in position `p` is `(-1)^p`.
pub fn boundary_matrix(complex: &SimplicialComplex, k: i64) -> Result<SignMatrix> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let top = match complex.dim() {
        Dim::MinusInfinity => unreachable!("non-void complex has finite dimension"),
        Dim::Finite(d) => d,
    };
    if k < -1 || k > top + 1 {
        return Ok(SignMatrix::zero(0, 0));
    }
    let cols_faces = complex.faces_of_dim(k);
    let rows_faces = if k == -1 {
        Vec::new() // the augmented complex stops below the empty face
    } else {
        complex.faces_of_dim(k - 1)
    };
    let row_index: BTreeMap<u64, usize> = rows_faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.bits(), i))
        .collect();
    let mut m = SignMatrix::zero(rows_faces.len(), cols_faces.len());
    for (c, face) in cols_faces.iter().enumerate() {
        for (pos, v) in face.members().into_iter().enumerate() {
            let sub = face.minus(Face::singleton(v));
            let r = row_index[&sub.bits()];
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            m.col_entries[c].push((r, sign));
        }
    }
    Ok(m)
}

/// Rank of a sign matrix over the given field, by exact Gaussian elimination.
pub fn rank(matrix: &SignMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_rational(matrix),
        FieldSpec::Prime(p) => rank_prime(matrix, p),
    }
}

fn rank_rational(matrix: &SignMatrix) -> usize {
    if matrix.rows == 0 || matrix.cols == 0 {
        return 0;
    }
    let mut dense: Vec<Vec<BigRational>> =
        vec![vec![BigRational::zero(); matrix.cols]; matrix.rows];
    for (c, entries) in matrix.col_entries.iter().enumerate() {
        for &(r, s) in entries {
            dense[r][c] += BigRational::from(BigInt::from(s));
        }
    }
    let mut rank = 0;
    for c in 0..matrix.cols {
        let pivot = (rank..matrix.rows).find(|&r| !dense[r][c].is_zero());
        let Some(pivot) = pivot else { continue };
        dense.swap(rank, pivot);
        let inv = dense[rank][c].clone();
        for v in dense[rank].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..matrix.rows {
            if r != rank && !dense[r][c].is_zero() {
                let factor = dense[r][c].clone();
                for cc in c..matrix.cols {
                    let t = &dense[rank][cc] * &factor;
                    dense[r][cc] = &dense[r][cc] - t;
                }
            }
        }
        rank += 1;
        if rank == matrix.rows {
            break;
        }
    }
    rank
}

fn rank_prime(matrix: &SignMatrix, p: u64) -> usize {
    if matrix.rows == 0 || matrix.cols == 0 {
        return 0;
    }
    let mut dense: Vec<Vec<u64>> = vec![vec![0; matrix.cols]; matrix.rows];
    for (c, entries) in matrix.col_entries.iter().enumerate() {
        for &(r, s) in entries {
            let v = if s >= 0 { s as u64 } else { p - ((-s) as u64 % p) } % p;
            dense[r][c] = (dense[r][c] + v) % p;
        }
    }
    let inv = |a: u64| -> u64 { mod_pow(a, p - 2, p) };
    let mut rank = 0;
    for c in 0..matrix.cols {
        let pivot = (rank..matrix.rows).find(|&r| dense[r][c] != 0);
        let Some(pivot) = pivot else { continue };
        dense.swap(rank, pivot);
        let f = inv(dense[rank][c]);
        for v in dense[rank].iter_mut() {
            *v = (*v as u128 * f as u128 % p as u128) as u64;
        }
        for r in 0..matrix.rows {
            if r != rank && dense[r][c] != 0 {
                let factor = dense[r][c];
                for cc in c..matrix.cols {
                    let t = (dense[rank][cc] as u128 * factor as u128 % p as u128) as u64;
                    dense[r][cc] = (dense[r][cc] + p - t) % p;
                }
            }
        }
        rank += 1;
        if rank == matrix.rows {
            break;
        }
    }
    rank
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Reduced homology dimensions in every degree. The void complex has zero
/// homology everywhere; `{∅}` has `H̃_{-1} = K`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSpec) -> HomologyVector {
    let mut by_degree = BTreeMap::new();
    if complex.is_void() {
        return HomologyVector { field, by_degree };
    }
    let top = complex.dim().finite().expect("non-void");
    // rank of ∂_k for k in -1 ..= top + 1
    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
    for k in -1..=top + 1 {
        let m = boundary_matrix(complex, k).expect("non-void");
        ranks.insert(k, rank(&m, field));
    }
    for k in -1..=top {
        let faces_k = complex.faces_of_dim(k).len();
        let nullity = faces_k - ranks[&k];
        let h = nullity - ranks[&(k + 1)];
        if h > 0 {
            by_degree.insert(k, h);
        }
    }
    let hv = HomologyVector { field, by_degree };
    debug_assert_eq!(
        hv.reduced_euler_characteristic(),
        reduced_euler_characteristic(complex),
        "homology must match the reduced Euler characteristic"
    );
    hv
}

/// Reduced Euler characteristic from the face counts, with `f_{-1} = 1`.
pub fn reduced_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    if complex.is_void() {
        return 0;
    }
    complex
        .all_faces()
        .iter()
        .map(|f| if f.cardinality() % 2 == 1 { 1 } else { -1 })
        .sum::<i64>()
}
