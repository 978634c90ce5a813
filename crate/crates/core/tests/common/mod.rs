//! Shared test support: an independent dense-elimination homology oracle
//! and the fixed corpus the agreement and invariant suites run on.
//!
//! The oracle enumerates faces, builds dense boundary matrices, and row
//! reduces them with textbook elimination on its own; it shares no code
//! with the sparse kernels or the homology module it checks.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use serre_core::generators::{
    boundary_simplex, cone, disjoint_union, join, random_complex, rp2_minimal, simplex, RandomSpec,
};
use serre_core::{Complex, FieldSpec};

// ---------------------------------------------------------------------------
// dense textbook elimination
// ---------------------------------------------------------------------------

pub fn dense_rank_q(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = &m[r][col] / &pivot;
                for c in col..cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn dense_rank_gfp(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    for row in &mut m {
        for v in row.iter_mut() {
            *v %= p;
        }
    }
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|r| m[*r][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        let inv = pow_mod(m[row][col], p - 2, p);
        for r in 0..rows {
            if r != row && m[r][col] != 0 {
                let factor = (m[r][col] as u128 * inv as u128 % p as u128) as u64;
                for c in col..cols {
                    let delta = (factor as u128 * m[row][c] as u128 % p as u128) as u64;
                    m[r][c] = (m[r][c] + p - delta) % p;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Rank of an integer matrix over the given field, via dense elimination.
pub fn dense_rank_over(m: &[Vec<i64>], field: &FieldSpec) -> usize {
    match field.characteristic() {
        0 => dense_rank_q(
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|v| BigRational::from_integer(BigInt::from(*v)))
                        .collect()
                })
                .collect(),
        ),
        p => dense_rank_gfp(
            m.iter()
                .map(|row| row.iter().map(|v| v.rem_euclid(p as i64) as u64).collect())
                .collect(),
            p,
        ),
    }
}

// ---------------------------------------------------------------------------
// brute-force reduced homology
// ---------------------------------------------------------------------------

/// All faces grouped by cardinality (index 0 holds the empty face), read
/// straight off the facet list by subset expansion.
fn faces_by_card(k: &Complex) -> Vec<Vec<Vec<u32>>> {
    let mut by_card: Vec<BTreeSet<Vec<u32>>> = Vec::new();
    if !k.is_void() {
        by_card.resize((k.dim_int() + 2) as usize, BTreeSet::new());
        for facet in k.facets() {
            let vs = facet.vertices();
            let n = vs.len();
            for mask in 0u32..(1 << n) {
                let sub: Vec<u32> = (0..n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| vs[b])
                    .collect();
                by_card[sub.len()].insert(sub);
            }
        }
    }
    by_card
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect()
}

/// Dense integer boundary matrix from cardinality c faces to cardinality
/// c−1 faces (c ≥ 1), with the usual alternating signs.
fn dense_boundary(lower: &[Vec<u32>], upper: &[Vec<u32>]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, face) in upper.iter().enumerate() {
        for (j, _) in face.iter().enumerate() {
            let mut sub = face.clone();
            sub.remove(j);
            let row = lower.binary_search(&sub).expect("subface present");
            m[row][col] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Reduced Betti numbers (degree, value) for −1 ..= dim K, computed with
/// the dense oracle only.
pub fn brute_betti(k: &Complex, field: &FieldSpec) -> Vec<(i64, usize)> {
    if k.is_void() {
        return Vec::new();
    }
    let by_card = faces_by_card(k);
    let top = by_card.len() - 1; // top cardinality = dim + 1
    let mut ranks = vec![0usize; top + 2]; // ranks[c] = rank of ∂ from card c
    for c in 1..=top {
        let m = dense_boundary(&by_card[c - 1], &by_card[c]);
        ranks[c] = dense_rank_over(&m, field);
    }
    (0..=top)
        .map(|c| {
            let betti = by_card[c].len() - ranks[c] - ranks[c + 1];
            (c as i64 - 1, betti)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// the corpus
// ---------------------------------------------------------------------------

pub fn cx(raw: &[&[&str]]) -> Complex {
    let owned: Vec<Vec<&str>> = raw.iter().map(|f| f.to_vec()).collect();
    Complex::from_facets(&owned)
}

pub fn bowtie() -> Complex {
    cx(&[&["a", "b", "c"], &["c", "d", "e"]])
}

pub fn fields4() -> Vec<FieldSpec> {
    vec![
        FieldSpec::rationals(),
        FieldSpec::prime(2).unwrap(),
        FieldSpec::prime(3).unwrap(),
        FieldSpec::prime(5).unwrap(),
    ]
}

/// Hand-designed fixtures. The names feed failure messages and reports.
pub fn designed_fixtures() -> Vec<(String, Complex)> {
    let mut out: Vec<(String, Complex)> = Vec::new();
    let mut push = |name: &str, k: Complex| out.push((name.to_string(), k));

    push("empty", Complex::empty_complex());
    for n in 0..=5 {
        push(&format!("simplex-{n}"), simplex(n));
    }
    for n in 1..=5 {
        push(&format!("sphere-{}", n - 1), boundary_simplex(n));
    }
    push("path-2", cx(&[&["a", "b"], &["b", "c"]]));
    push("star-3", cx(&[&["a", "b"], &["a", "c"], &["a", "d"]]));
    push("bowtie", bowtie());
    push("triangle-plus-edge", cx(&[&["a", "b", "c"], &["d", "e"]]));
    push("mixed-dims", cx(&[&["a", "b", "c", "d"], &["d", "e"], &["f"]]));
    push("two-points", disjoint_union(&simplex(0), &simplex(0)));
    push("two-triangles", disjoint_union(&simplex(2), &simplex(2)));
    push(
        "two-circles",
        disjoint_union(&boundary_simplex(2), &boundary_simplex(2)),
    );
    push("rp2", rp2_minimal());
    push("cone-circle", cone(&boundary_simplex(2)));
    push("cone-bowtie", cone(&bowtie()));
    push("cone-rp2", cone(&rp2_minimal()));
    push("circle-4", join(&boundary_simplex(1), &boundary_simplex(1)));
    push(
        "suspension-circle",
        join(&boundary_simplex(1), &boundary_simplex(2)),
    );
    push("sphere-3-join", join(&boundary_simplex(2), &boundary_simplex(2)));
    out
}

/// Fixtures whose face links are all torsion-free integrally (everything
/// designed except the projective-plane ones), where verdicts must not
/// depend on the field.
pub fn torsion_free_fixtures() -> Vec<(String, Complex)> {
    designed_fixtures()
        .into_iter()
        .filter(|(name, _)| !name.contains("rp2"))
        .collect()
}

/// The spec for random corpus entry `i`; fixed for reproducibility.
pub fn corpus_spec(i: u32) -> RandomSpec {
    let n_vertices = 4 + (i % 5);
    let max_dim = (1 + (i % 4)).min(n_vertices - 1);
    RandomSpec {
        n_vertices,
        max_dim,
        facet_count: 2 + (i % 6),
        seed: 1000 + i as u64,
    }
}

/// 200 fixed-seed random complexes with n ≤ 8 vertices and dim ≤ 4.
pub fn random_corpus() -> Vec<(String, Complex)> {
    (0..200)
        .map(|i| (format!("random-{i:03}"), random_complex(&corpus_spec(i))))
        .collect()
}

pub fn full_corpus() -> Vec<(String, Complex)> {
    let mut out = designed_fixtures();
    out.extend(random_corpus());
    out
}
