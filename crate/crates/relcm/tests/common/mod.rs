// Not every integration test uses every oracle.
#![allow(dead_code)]

//! Independent naive oracles for the integration tests. Everything here is
//! deliberately implemented from scratch on `BTreeSet`-based faces, sharing
//! no code with the library's bitset machinery.

use relcm::SimplicialComplex;
use std::collections::BTreeSet;

pub type NaiveFace = BTreeSet<usize>;

/// Every face of the complex, as the downward closure of the facet list.
pub fn naive_faces(complex: &SimplicialComplex) -> BTreeSet<NaiveFace> {
    let mut faces = BTreeSet::new();
    for facet in complex.facets() {
        let members: Vec<usize> = facet.members();
        for mask in 0..(1u64 << members.len()) {
            let face: NaiveFace = members
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            faces.insert(face);
        }
    }
    faces
}

/// Dimension as `max |F| - 1`; `None` for the void complex.
pub fn naive_dim(complex: &SimplicialComplex) -> Option<i64> {
    naive_faces(complex)
        .iter()
        .map(|f| f.len() as i64 - 1)
        .max()
}

/// `cd_Q` oracle: one more than the dimension of the restriction to the
/// w-vertices, computed by brute-force face enumeration.
pub fn naive_cd_q(complex: &SimplicialComplex) -> Option<i64> {
    let m = complex.ground().m();
    naive_faces(complex)
        .iter()
        .filter(|f| f.iter().all(|&v| v >= m))
        .map(|f| f.len() as i64)
        .max()
}

/// Connectivity of the vertex set under shared-facet adjacency.
pub fn naive_connected(complex: &SimplicialComplex) -> bool {
    let vertices: Vec<usize> = naive_faces(complex)
        .iter()
        .filter(|f| f.len() == 1)
        .map(|f| *f.iter().next().unwrap())
        .collect();
    if vertices.len() <= 1 {
        return true;
    }
    let mut component: BTreeSet<usize> = [vertices[0]].into();
    loop {
        let mut grew = false;
        for facet in complex.facets() {
            let members: BTreeSet<usize> = facet.members().into_iter().collect();
            if members.iter().any(|v| component.contains(v)) {
                for &v in &members {
                    grew |= component.insert(v);
                }
            }
        }
        if !grew {
            break;
        }
    }
    vertices.iter().all(|v| component.contains(v))
}

/// Boundary matrix over the integers, rows indexed by (k-1)-faces and
/// columns by k-faces, built from scratch.
pub fn naive_boundary(complex: &SimplicialComplex, k: i64) -> Vec<Vec<i64>> {
    let faces = naive_faces(complex);
    let rows: Vec<&NaiveFace> = faces.iter().filter(|f| f.len() as i64 == k).collect();
    let cols: Vec<&NaiveFace> = faces.iter().filter(|f| f.len() as i64 == k + 1).collect();
    let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, col) in cols.iter().enumerate() {
        let sorted: Vec<usize> = col.iter().copied().collect();
        for (pos, &drop) in sorted.iter().enumerate() {
            let mut sub = (*col).clone();
            sub.remove(&drop);
            let i = rows.iter().position(|r| **r == sub).expect("subface present");
            matrix[i][j] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    matrix
}

/// Exact rank over the rationals (fraction-free Bareiss elimination on
/// i128 entries; fine at these sizes).
pub fn naive_rank_rational(matrix: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over the prime field `F_p`.
pub fn naive_rank_mod_p(matrix: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p)).collect())
        .collect();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..cols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in col..cols {
                    m[r][c] = (m[r][c] - factor * m[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // Fermat: a^(p-2) mod p
    let mut result = 1i64;
    let mut base = a.rem_euclid(p);
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Reduced Betti number in homological degree `k` over the chosen field
/// (`None` = rationals, `Some(p)` = prime field), via rank-nullity on the
/// augmented chain complex. Degree −1 uses the augmentation row.
pub fn naive_reduced_betti(complex: &SimplicialComplex, k: i64, p: Option<i64>) -> usize {
    let faces = naive_faces(complex);
    let count = |size: i64| faces.iter().filter(|f| f.len() as i64 == size + 1).count();
    let rank_of = |m: &Vec<Vec<i64>>| match p {
        None => naive_rank_rational(m),
        Some(p) => naive_rank_mod_p(m, p),
    };
    // augmented complex: C_{-1} = K when {} is a face
    let chain_dim = count(k);
    if chain_dim == 0 {
        return 0;
    }
    let d_k = if k == -1 {
        // boundary of C_{-1} is zero
        vec![vec![0i64; 1]; 0]
    } else if k == 0 {
        // augmentation: every vertex maps to 1
        vec![vec![1i64; chain_dim]; 1]
    } else {
        naive_boundary(complex, k)
    };
    let d_k1 = if k == -1 {
        // augmentation again, as the incoming map
        vec![vec![1i64; count(0)]; 1]
    } else {
        naive_boundary(complex, k + 1)
    };
    let rank_out = rank_of(&d_k);
    let rank_in = rank_of(&d_k1);
    chain_dim - rank_out - rank_in
}
