//! Reduced simplicial homology dimensions over a coefficient field.
//!
//! Everything is built from the augmented chain complex: the degree-0
//! boundary map is the augmentation sending every vertex to the empty face
//! with coefficient 1, so the empty complex `{∅}` has β̃₋₁ = 1 and cones are
//! acyclic in every degree.

use crate::complex::{Complex, Dim};
use crate::error::{Error, Result};
use crate::linalg::{with_field, Field, FieldSpec, SparseMatrix};

/// Reduced Betti numbers of one complex over one field, for every degree
/// in `[−1, dim K]`; all other degrees are implicitly 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    field: FieldSpec,
    dim: Dim,
    betti: Vec<usize>, // betti[j] = β̃_{j−1}
}

impl HomologyProfile {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    /// β̃_i, zero outside `[−1, dim K]`.
    pub fn betti(&self, i: i64) -> usize {
        if i < -1 {
            return 0;
        }
        self.betti.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Pairs `(degree, β̃_degree)` for degrees −1 ..= dim K.
    pub fn degrees(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.betti.iter().enumerate().map(|(j, b)| (j as i64 - 1, *b))
    }

    /// True iff every Betti number vanishes.
    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|b| *b == 0)
    }
}

/// Boundary matrix ∂_i of the augmented chain complex.
///
/// Rows are indexed by the (i−1)-faces in lexicographic order (the single
/// face ∅ when i = 0), columns by the i-faces. The column of a face τ
/// carries coefficient (−1)^j on the face obtained by deleting τ's j-th
/// smallest vertex; for i = 0 this is the augmentation row of ones.
pub fn boundary_matrix<F: Field>(
    k: &Complex,
    i: i64,
    field: &F,
) -> Result<SparseMatrix<F::Elem>> {
    if k.is_void() || i < 0 || i > k.dim_int() {
        return Err(Error::BoundaryDegreeOutOfRange {
            i,
            dim: k.dim_int(),
        });
    }
    let rows = k.faces(i - 1);
    let cols = k.faces(i);
    let mut trips = Vec::with_capacity(cols.len() * (i as usize + 1));
    for (c, tau) in cols.iter().enumerate() {
        for j in 0..=(i as usize) {
            let sub = tau.delete_vertex_at(j);
            let r = rows
                .binary_search(&sub)
                .expect("boundary face of a face is a face");
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let v = field.from_integer(sign);
            if !field.is_zero(&v) {
                trips.push((r, c, v));
            }
        }
    }
    SparseMatrix::from_triplets(rows.len(), cols.len(), trips)
}

/// Ranks of ∂_0 .. ∂_t where t = min(max_i, dim K); index j holds rank ∂_j.
fn boundary_ranks<F: Field>(k: &Complex, field: &F, max_i: i64) -> Vec<usize> {
    let top = max_i.min(k.dim_int());
    let mut ranks = Vec::new();
    for i in 0..=top {
        let m = boundary_matrix(k, i, field).expect("degree within range");
        ranks.push(field.rank(&m));
    }
    ranks
}

/// β̃_{−1} .. β̃_t with t = min(max_degree, dim K), padded with zeros up to
/// `max_degree`; each boundary rank is computed once and shared between
/// adjacent degrees. Index j of the result holds β̃_{j−1}.
pub(crate) fn betti_prefix_impl<F: Field>(
    k: &Complex,
    field: &F,
    max_degree: i64,
) -> Vec<usize> {
    let len = (max_degree + 2).max(0) as usize;
    let mut out = vec![0usize; len];
    if k.is_void() {
        return out;
    }
    let dim = k.dim_int();
    let ranks = boundary_ranks(k, field, max_degree + 1);
    let rank_of = |j: i64| -> usize {
        if j < 0 || j > dim {
            0
        } else {
            ranks.get(j as usize).copied().unwrap_or(0)
        }
    };
    for i in -1..=max_degree.min(dim) {
        let f_i = k.face_count(i);
        out[(i + 1) as usize] = f_i - rank_of(i) - rank_of(i + 1);
    }
    out
}

/// The i-th reduced Betti number. Total: any i is accepted; degrees outside
/// `[−1, dim K]` and the void complex give 0, and β̃₋₁({∅}) = 1.
pub fn reduced_betti(k: &Complex, i: i64, field: &FieldSpec) -> usize {
    if k.is_void() || i < -1 || i > k.dim_int() {
        return 0;
    }
    with_field!(field, |f| reduced_betti_impl(k, i, f))
}

pub(crate) fn reduced_betti_impl<F: Field>(k: &Complex, i: i64, field: &F) -> usize {
    if k.is_void() || i < -1 || i > k.dim_int() {
        return 0;
    }
    let f_i = k.face_count(i);
    let rank_i = if i >= 0 {
        let m = boundary_matrix(k, i, field).expect("degree within range");
        field.rank(&m)
    } else {
        0
    };
    let rank_next = if i + 1 <= k.dim_int() {
        let m = boundary_matrix(k, i + 1, field).expect("degree within range");
        field.rank(&m)
    } else {
        0
    };
    f_i - rank_i - rank_next
}

/// Betti numbers for all degrees −1 ..= dim K over one field.
pub fn homology_profile(k: &Complex, field: &FieldSpec) -> HomologyProfile {
    let betti = if k.is_void() {
        Vec::new()
    } else {
        with_field!(field, |f| betti_prefix_impl(k, f, k.dim_int()))
    };
    HomologyProfile {
        field: *field,
        dim: k.dim(),
        betti,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn cx(raw: &[&[&str]]) -> Complex {
        let owned: Vec<Vec<&str>> = raw.iter().map(|f| f.to_vec()).collect();
        Complex::from_facets(&owned)
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn boundary_of_single_edge() {
        let k = cx(&[&["a", "b"]]);
        let m = boundary_matrix(&k, 1, &Rationals).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (2, 1));
        let vals: Vec<i64> = m
            .entries()
            .iter()
            .map(|(r, _, v)| {
                assert!(v.is_integer());
                let _ = r;
                i64::try_from(v.numer().clone()).unwrap()
            })
            .collect();
        assert_eq!(vals, vec![-1, 1]);
    }

    #[test]
    fn augmentation_row() {
        let k = cx(&[&["a"]]);
        let m = boundary_matrix(&k, 0, &Rationals).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (1, 1));
        assert_eq!(m.entries()[0].2, Rationals.from_integer(1));
    }

    #[test]
    fn three_cycle_boundary_rank() {
        let k = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let m = boundary_matrix(&k, 1, &Rationals).unwrap();
        assert_eq!((m.n_rows(), m.n_cols()), (3, 3));
        assert_eq!(Rationals.rank(&m), 2);
    }

    #[test]
    fn boundary_degree_range_errors() {
        let k = cx(&[&["a", "b"]]);
        assert!(boundary_matrix(&k, -1, &Rationals).is_err());
        assert!(boundary_matrix(&k, 2, &Rationals).is_err());
        assert!(boundary_matrix(&Complex::void(), 0, &Rationals).is_err());
    }

    #[test]
    fn betti_conventions() {
        assert_eq!(reduced_betti(&Complex::empty_complex(), -1, &q()), 1);
        assert_eq!(reduced_betti(&Complex::void(), 0, &q()), 0);
        assert_eq!(reduced_betti(&Complex::void(), -1, &q()), 0);
        let point = cx(&[&["a"]]);
        for i in -1..=2 {
            assert_eq!(reduced_betti(&point, i, &q()), 0);
        }
    }

    #[test]
    fn three_cycle_betti() {
        let k = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert_eq!(reduced_betti(&k, 0, &q()), 0);
        assert_eq!(reduced_betti(&k, 1, &q()), 1);
    }

    #[test]
    fn boundary_tetrahedron_profile() {
        let k = cx(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ]);
        let p = homology_profile(&k, &q());
        assert_eq!(p.betti(-1), 0);
        assert_eq!(p.betti(0), 0);
        assert_eq!(p.betti(1), 0);
        assert_eq!(p.betti(2), 1);
        assert!(!p.is_acyclic());
    }

    #[test]
    fn two_points_and_bowtie() {
        let pts = cx(&[&["a"], &["b"]]);
        assert_eq!(reduced_betti(&pts, 0, &q()), 1);
        let bowtie = cx(&[&["a", "b", "c"], &["c", "d", "e"]]);
        let p = homology_profile(&bowtie, &q());
        assert!(p.is_acyclic());
    }

    #[test]
    fn characteristic_two_detects_torsion() {
        // Mod-2 rank of a boundary map can drop; the 2x2 case in linalg is
        // the small model, here just check Betti over GF(2) >= over Q holds
        // on a complex with full homology agreement.
        let k = cx(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(reduced_betti(&k, 1, &f2), 1);
        let _ = PrimeField::new(2).unwrap();
    }
}
