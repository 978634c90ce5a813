//! Independent topological characterizations used to cross-check the
//! definitional checks.
//!
//! Local homology at a point in the interior of a face σ is the reduced
//! link homology shifted by dim σ + 1, so D_k — the locus where degree-k
//! local homology survives — is a union of open face interiors, and its
//! ball-dimension is the largest dimension of a contributing face. The
//! checks here run entirely on that combinatorial reading:
//!
//! * plain (S_r): purity + vanishing global homology below r−1 +
//!   dim D_k ≤ k − r for all k ≤ d−2;
//! * sequential (S_r), route one: vanishing link homology inside every
//!   facet-closure stratum;
//! * sequential (S_r), route two: global homology and local-homology
//!   dimension bounds per facet-closure stratum.
//!
//! None of these call into the definitional module; the only shared code
//! is face enumeration and Betti computation.

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::homology::{betti_prefix_impl, reduced_betti_impl};
use crate::linalg::{with_field, Field, FieldSpec};
use crate::verdict::{FailedCondition, Method, SerreVerdict, Stratum, Witness};

/// For each nonempty face σ, the degrees k in which local homology at an
/// interior point of σ is nonzero; rows are in (dim, lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHomologyTable {
    field: FieldSpec,
    rows: Vec<(Face, Vec<i64>)>,
}

impl LocalHomologyTable {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> &[(Face, Vec<i64>)] {
        &self.rows
    }

    pub fn degrees_of(&self, face: &Face) -> Option<&[i64]> {
        self.rows
            .iter()
            .find(|(f, _)| f == face)
            .map(|(_, ds)| ds.as_slice())
    }

    /// dim D_k from the table: the max face dimension listing `k`, or
    /// `None` when D_k is empty.
    pub fn d_dimension(&self, k: i64) -> Option<i64> {
        self.rows
            .iter()
            .filter(|(_, ds)| ds.contains(&k))
            .map(|(f, _)| f.dim())
            .max()
    }
}

fn require_nonvoid(k: &Complex) -> Result<()> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(())
}

fn check_r_range(k: &Complex, r: i64) -> Result<i64> {
    let d = k.dim_int() + 1;
    if r < 2 || r > d {
        return Err(Error::ROutOfRange { r, d });
    }
    Ok(d)
}

fn degrees_for_face<F: Field>(k: &Complex, sigma: &Face, field: &F, max_degree: i64) -> Vec<i64> {
    let link = k.link(sigma).expect("face of the complex");
    let top = max_degree - sigma.dim() - 1;
    let betti = betti_prefix_impl(&link, field, top.min(link.dim_int()));
    betti
        .iter()
        .enumerate()
        .filter(|(_, b)| **b != 0)
        .map(|(j, _)| j as i64 - 1 + sigma.dim() + 1)
        .collect()
}

/// Sorted degrees k with nonzero local homology at an interior point of
/// `sigma`, i.e. with β̃_{k−dim σ−1}(link(σ)) ≠ 0.
pub fn local_homology_degrees(k: &Complex, sigma: &Face, field: &FieldSpec) -> Result<Vec<i64>> {
    if sigma.is_empty() {
        return Err(Error::EmptyFaceLocalHomology);
    }
    if !k.contains_face(sigma) {
        return Err(Error::FaceNotInComplex(k.describe_face(sigma)));
    }
    Ok(with_field!(field, |f| degrees_for_face(
        k,
        sigma,
        f,
        k.dim_int()
    )))
}

/// Full local homology table of a non-void complex.
pub fn local_homology_table(k: &Complex, field: &FieldSpec) -> Result<LocalHomologyTable> {
    require_nonvoid(k)?;
    let mut rows = Vec::new();
    for s_dim in 0..=k.dim_int() {
        for sigma in k.faces(s_dim).iter() {
            let ds = with_field!(field, |f| degrees_for_face(k, sigma, f, k.dim_int()));
            rows.push((sigma.clone(), ds));
        }
    }
    Ok(LocalHomologyTable {
        field: *field,
        rows,
    })
}

/// dim D_k: the max dimension of a face whose interior points carry
/// degree-`degree` local homology; `None` when that locus is empty.
pub fn d_set_dimension(k: &Complex, degree: i64, field: &FieldSpec) -> Result<Option<i64>> {
    require_nonvoid(k)?;
    for s_dim in (0..=k.dim_int()).rev() {
        for sigma in k.faces(s_dim).iter() {
            let j = degree - s_dim - 1;
            let hit = with_field!(field, |f| {
                let link = k.link(sigma).expect("face of the complex");
                reduced_betti_impl(&link, j, f) != 0
            });
            if hit {
                return Ok(Some(s_dim));
            }
        }
    }
    Ok(None)
}

/// (S_r) via purity, global homology, and local-homology dimension bounds.
/// Requires 2 ≤ r ≤ d.
pub fn check_serre_local_homology(k: &Complex, r: i64, field: &FieldSpec) -> Result<SerreVerdict> {
    require_nonvoid(k)?;
    let d = check_r_range(k, r)?;
    let method = Method::LocalHomology;

    // (1) every facet has top dimension
    if !k.is_pure() {
        let top = k.dim_int();
        let short = k
            .facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dim() < top)
            .min_by_key(|(i, f)| (f.dim(), *i))
            .map(|(_, f)| f.clone())
            .expect("impure complex has a short facet");
        return Ok(SerreVerdict::failed(
            r,
            *field,
            method,
            Witness {
                degree: short.dim(),
                face: k.face_labels(&short),
                stratum: Stratum::Whole,
                condition: FailedCondition::Purity,
            },
        ));
    }

    // (2) global reduced homology vanishes below r−1
    let betti = with_field!(field, |f| betti_prefix_impl(k, f, r - 2));
    for j in -1..(r - 1) {
        if betti[(j + 1) as usize] != 0 {
            return Ok(SerreVerdict::failed(
                r,
                *field,
                method,
                Witness {
                    face: Vec::new(),
                    degree: j,
                    stratum: Stratum::Whole,
                    condition: FailedCondition::LinkHomology,
                },
            ));
        }
    }

    // (3) dim D_k ≤ k − r for all 0 ≤ k ≤ d−2
    if let Some(w) = local_dimension_violation(k, r, field, d - 2, Stratum::Whole) {
        return Ok(SerreVerdict::failed(r, *field, method, w));
    }
    Ok(SerreVerdict::passed(r, *field, method))
}

/// Scans degrees 0..=top_degree for dim D_k > k − r inside `stratum_complex`
/// and reports the smallest failing degree with the face of maximal
/// dimension carrying it (first in lexicographic order on ties).
fn local_dimension_violation(
    stratum_complex: &Complex,
    r: i64,
    field: &FieldSpec,
    top_degree: i64,
    stratum: Stratum,
) -> Option<Witness> {
    if top_degree < 0 {
        return None;
    }
    // best[k] = (max face dim listing degree k, first face at that dim)
    let mut best: Vec<Option<(i64, Face)>> = vec![None; (top_degree + 1) as usize];
    for s_dim in 0..=top_degree.min(stratum_complex.dim_int()) {
        for sigma in stratum_complex.faces(s_dim).iter() {
            let ds = with_field!(field, |f| degrees_for_face(
                stratum_complex,
                sigma,
                f,
                top_degree
            ));
            for k_deg in ds {
                if k_deg < 0 || k_deg > top_degree {
                    continue;
                }
                let slot = &mut best[k_deg as usize];
                if slot.as_ref().map_or(true, |(d0, _)| s_dim > *d0) {
                    *slot = Some((s_dim, sigma.clone()));
                }
            }
        }
    }
    for k_deg in 0..=top_degree {
        if let Some((s_dim, face)) = &best[k_deg as usize] {
            if *s_dim > k_deg - r {
                return Some(Witness {
                    face: stratum_complex.face_labels(face),
                    degree: k_deg,
                    stratum,
                    condition: FailedCondition::LocalHomologyDimension,
                });
            }
        }
    }
    None
}

/// Sequential (S_r) via link homology inside every facet-closure stratum:
/// for all 0 ≤ m ≤ dim K, all σ in the stratum, all
/// −1 ≤ j < min{m − dim σ − 1, r − 1}, the link homology vanishes.
pub fn check_sequential_strata_links(
    k: &Complex,
    r: i64,
    field: &FieldSpec,
) -> Result<SerreVerdict> {
    if r < 2 {
        return Err(Error::SerreRTooSmall(r));
    }
    require_nonvoid(k)?;
    let method = Method::StrataLinks;
    for m in 0..=k.dim_int() {
        let xm = k.facet_closure(m)?;
        for s_dim in -1..m {
            for sigma in xm.faces(s_dim).iter() {
                let bound = (m - s_dim - 1).min(r - 1);
                if bound <= -1 {
                    continue;
                }
                let betti = with_field!(field, |f| {
                    let link = xm.link(sigma).expect("face of the stratum");
                    betti_prefix_impl(&link, f, bound - 1)
                });
                for j in -1..bound {
                    if betti[(j + 1) as usize] != 0 {
                        return Ok(SerreVerdict::failed(
                            r,
                            *field,
                            method,
                            Witness {
                                face: xm.face_labels(sigma),
                                degree: j,
                                stratum: Stratum::FacetClosure(m),
                                condition: FailedCondition::LinkHomology,
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(SerreVerdict::passed(r, *field, method))
}

/// Sequential (S_r) via per-stratum global homology and local-homology
/// dimension bounds: for all 0 ≤ m ≤ d−1, the stratum X_m has vanishing
/// reduced homology below min{m, r−1} and dim D_k(X_m) ≤ k − r for all
/// k ≤ m−1. Requires 2 ≤ r ≤ d.
pub fn check_sequential_local_homology(
    k: &Complex,
    r: i64,
    field: &FieldSpec,
) -> Result<SerreVerdict> {
    require_nonvoid(k)?;
    check_r_range(k, r)?;
    let method = Method::StrataLocalHomology;
    for m in 0..=k.dim_int() {
        let xm = k.facet_closure(m)?;

        let bound = m.min(r - 1);
        let betti = with_field!(field, |f| betti_prefix_impl(&xm, f, bound - 1));
        for j in -1..bound {
            if betti[(j + 1) as usize] != 0 {
                return Ok(SerreVerdict::failed(
                    r,
                    *field,
                    method,
                    Witness {
                        face: Vec::new(),
                        degree: j,
                        stratum: Stratum::FacetClosure(m),
                        condition: FailedCondition::LinkHomology,
                    },
                ));
            }
        }

        if let Some(w) =
            local_dimension_violation(&xm, r, field, m - 1, Stratum::FacetClosure(m))
        {
            return Ok(SerreVerdict::failed(r, *field, method, w));
        }
    }
    Ok(SerreVerdict::passed(r, *field, method))
}
