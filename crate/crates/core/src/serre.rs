//! Definitional checks: (S_r), Cohen–Macaulayness, sequential (S_r), and
//! sequential Cohen–Macaulayness, straight from the vanishing-link-homology
//! definition.
//!
//! A complex of dimension d−1 is (S_r) over a field when for every face σ
//! (including ∅) the reduced link homology β̃_i(link(σ)) vanishes for all
//! −1 ≤ i < min{r−1, d−dim σ−2}. Degree −1 participates: a facet of sub-top
//! dimension has link {∅} with β̃₋₁ = 1, which is exactly how impurity makes
//! (S_2) fail. (S_d) is Cohen–Macaulayness; the sequential variants quantify
//! over all pure skeleta.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::homology::betti_prefix_impl;
use crate::linalg::{with_field, Field, FieldSpec};
use crate::verdict::{FailedCondition, Method, SerreVerdict, Stratum, Witness};

fn require_nonvoid(k: &Complex) -> Result<()> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    Ok(())
}

fn require_geometric(k: &Complex) -> Result<()> {
    require_nonvoid(k)?;
    if k.dim_int() < 0 {
        return Err(Error::EmptyComplex);
    }
    Ok(())
}

/// Scans faces in witness order (dim σ ascending, then lexicographic, then
/// degree ascending) and reports link-homology failures against the (S_r)
/// bound. Short-circuits on the first failure unless `collect_all`.
///
/// Accepts any r ≥ 0 so the Cohen–Macaulay path can run r = d on
/// low-dimensional skeleta.
fn serre_scan<F: Field>(
    k: &Complex,
    r: i64,
    field: &F,
    stratum: Stratum,
    collect_all: bool,
) -> Vec<Witness> {
    debug_assert!(!k.is_void());
    let d = k.dim_int() + 1;
    let mut out = Vec::new();
    for s_dim in -1..=k.dim_int() {
        for sigma in k.faces(s_dim).iter() {
            let bound = (r - 1).min(d - s_dim - 2);
            if bound <= -1 {
                continue;
            }
            let link = k.link(sigma).expect("enumerated face");
            let betti = betti_prefix_impl(&link, field, bound - 1);
            for i in -1..bound {
                if betti[(i + 1) as usize] != 0 {
                    out.push(Witness {
                        face: k.face_labels(sigma),
                        degree: i,
                        stratum,
                        condition: FailedCondition::LinkHomology,
                    });
                    if !collect_all {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Serre's condition (S_r) by definition. Requires r ≥ 2 and dim K ≥ 0.
pub fn is_serre(k: &Complex, r: i64, field: &FieldSpec) -> Result<SerreVerdict> {
    if r < 2 {
        return Err(Error::SerreRTooSmall(r));
    }
    require_geometric(k)?;
    let witnesses = with_field!(field, |f| serre_scan(k, r, f, Stratum::Whole, false));
    Ok(match witnesses.into_iter().next() {
        None => SerreVerdict::passed(r, *field, Method::Definition),
        Some(w) => SerreVerdict::failed(r, *field, Method::Definition, w),
    })
}

/// All (S_r) failures, in witness order (audit mode).
pub fn serre_failures(k: &Complex, r: i64, field: &FieldSpec) -> Result<Vec<Witness>> {
    if r < 2 {
        return Err(Error::SerreRTooSmall(r));
    }
    require_geometric(k)?;
    Ok(with_field!(field, |f| serre_scan(
        k,
        r,
        f,
        Stratum::Whole,
        true
    )))
}

/// Cohen–Macaulayness: (S_d) with d = dim K + 1. Defined for every non-void
/// complex; 0-dimensional complexes and {∅} are Cohen–Macaulay.
pub fn is_cm(k: &Complex, field: &FieldSpec) -> Result<SerreVerdict> {
    require_nonvoid(k)?;
    let d = k.dim_int() + 1;
    let witnesses = with_field!(field, |f| serre_scan(k, d, f, Stratum::Whole, false));
    Ok(match witnesses.into_iter().next() {
        None => SerreVerdict::passed(d, *field, Method::Definition),
        Some(w) => SerreVerdict::failed(d, *field, Method::Definition, w),
    })
}

/// The largest r in [2, d] with (S_r) holding, or 1 when even (S_2) fails.
/// (S_{r+1}) implies (S_r), so the first hit descending from d is the max.
pub fn max_serre_r(k: &Complex, field: &FieldSpec) -> Result<i64> {
    require_geometric(k)?;
    let d = k.dim_int() + 1;
    for r in (2..=d).rev() {
        let holds = with_field!(field, |f| serre_scan(k, r, f, Stratum::Whole, false)
            .is_empty());
        if holds {
            return Ok(r);
        }
    }
    Ok(1)
}

/// Sequential (S_r): every pure skeleton K^[m], 0 ≤ m ≤ dim K, is (S_r).
pub fn is_sequentially_serre(k: &Complex, r: i64, field: &FieldSpec) -> Result<SerreVerdict> {
    if r < 2 {
        return Err(Error::SerreRTooSmall(r));
    }
    require_nonvoid(k)?;
    for m in 0..=k.dim_int() {
        let skel = k.pure_skeleton(m)?;
        let witnesses = with_field!(field, |f| serre_scan(
            &skel,
            r,
            f,
            Stratum::PureSkeleton(m),
            false
        ));
        if let Some(w) = witnesses.into_iter().next() {
            return Ok(SerreVerdict::failed(
                r,
                *field,
                Method::SequentialDefinition,
                w,
            ));
        }
    }
    Ok(SerreVerdict::passed(r, *field, Method::SequentialDefinition))
}

/// All sequential (S_r) failures across every skeleton (audit mode).
pub fn sequential_serre_failures(
    k: &Complex,
    r: i64,
    field: &FieldSpec,
) -> Result<Vec<Witness>> {
    if r < 2 {
        return Err(Error::SerreRTooSmall(r));
    }
    require_nonvoid(k)?;
    let mut out = Vec::new();
    for m in 0..=k.dim_int() {
        let skel = k.pure_skeleton(m)?;
        out.extend(with_field!(field, |f| serre_scan(
            &skel,
            r,
            f,
            Stratum::PureSkeleton(m),
            true
        )));
    }
    Ok(out)
}

/// Sequential Cohen–Macaulayness: every pure skeleton K^[m] is
/// Cohen–Macaulay, i.e. satisfies (S_{m+1}).
pub fn is_sequentially_cm(k: &Complex, field: &FieldSpec) -> Result<SerreVerdict> {
    require_nonvoid(k)?;
    let d = k.dim_int() + 1;
    for m in 0..=k.dim_int() {
        let skel = k.pure_skeleton(m)?;
        let witnesses = with_field!(field, |f| serre_scan(
            &skel,
            m + 1,
            f,
            Stratum::PureSkeleton(m),
            false
        ));
        if let Some(w) = witnesses.into_iter().next() {
            return Ok(SerreVerdict::failed(
                d,
                *field,
                Method::SequentialDefinition,
                w,
            ));
        }
    }
    Ok(SerreVerdict::passed(d, *field, Method::SequentialDefinition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::witness_revalidates;

    fn cx(raw: &[&[&str]]) -> Complex {
        let owned: Vec<Vec<&str>> = raw.iter().map(|f| f.to_vec()).collect();
        Complex::from_facets(&owned)
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn sphere2() -> Complex {
        cx(&[
            &["a", "b", "c"],
            &["a", "b", "d"],
            &["a", "c", "d"],
            &["b", "c", "d"],
        ])
    }

    #[test]
    fn sphere_is_s2_and_cm() {
        let k = sphere2();
        assert!(is_serre(&k, 2, &q()).unwrap().holds);
        assert!(is_cm(&k, &q()).unwrap().holds);
        assert_eq!(max_serre_r(&k, &q()).unwrap(), 3);
    }

    #[test]
    fn disconnected_fails_at_empty_face() {
        let k = cx(&[&["a", "b", "c"], &["d", "e", "f"]]);
        let v = is_serre(&k, 2, &q()).unwrap();
        assert!(!v.holds);
        let w = v.witness.clone().unwrap();
        assert!(w.face.is_empty());
        assert_eq!(w.degree, 0);
        assert!(witness_revalidates(&k, &v));
    }

    #[test]
    fn bowtie_fails_at_cut_vertex() {
        let k = cx(&[&["a", "b", "c"], &["c", "d", "e"]]);
        let v = is_serre(&k, 2, &q()).unwrap();
        assert!(!v.holds);
        let w = v.witness.clone().unwrap();
        assert_eq!(w.face, vec!["c".to_string()]);
        assert_eq!(w.degree, 0);
        assert!(witness_revalidates(&k, &v));
        assert_eq!(max_serre_r(&k, &q()).unwrap(), 1);
    }

    #[test]
    fn impurity_fails_via_degree_minus_one() {
        let k = cx(&[&["a", "b", "c"], &["d", "e"]]);
        let v = is_serre(&k, 2, &q()).unwrap();
        assert!(!v.holds);
        // the first witness in (dim, lex, degree) order is the empty face in
        // the disconnected complex; purity failures surface at the short facet
        let failures = serre_failures(&k, 2, &q()).unwrap();
        assert!(failures
            .iter()
            .any(|w| w.face == vec!["d".to_string(), "e".to_string()] && w.degree == -1));
    }

    #[test]
    fn simplices_are_cm() {
        assert!(is_cm(&cx(&[&["a", "b"]]), &q()).unwrap().holds);
        assert!(is_cm(&cx(&[&["a"]]), &q()).unwrap().holds);
        assert!(is_cm(&Complex::empty_complex(), &q()).unwrap().holds);
    }

    #[test]
    fn zero_dimensional_complexes() {
        let pts = cx(&[&["a"], &["b"], &["c"]]);
        assert!(is_cm(&pts, &q()).unwrap().holds);
        assert!(is_sequentially_cm(&pts, &q()).unwrap().holds);
        assert_eq!(max_serre_r(&pts, &q()).unwrap(), 1);
    }

    #[test]
    fn r_collapse_above_d() {
        let k = sphere2();
        let a = is_serre(&k, 3, &q()).unwrap().holds;
        for r in 4..=8 {
            assert_eq!(is_serre(&k, r, &q()).unwrap().holds, a);
        }
    }

    #[test]
    fn parameter_validation() {
        let k = sphere2();
        assert!(matches!(is_serre(&k, 1, &q()), Err(Error::SerreRTooSmall(1))));
        assert!(matches!(
            is_serre(&Complex::void(), 2, &q()),
            Err(Error::VoidComplex)
        ));
        assert!(matches!(
            is_serre(&Complex::empty_complex(), 2, &q()),
            Err(Error::EmptyComplex)
        ));
    }

    #[test]
    fn sequential_examples() {
        let k = sphere2();
        for r in 2..=3 {
            assert!(is_sequentially_serre(&k, r, &q()).unwrap().holds);
        }
        assert!(is_sequentially_cm(&k, &q()).unwrap().holds);

        // A pure complex equals its top pure skeleton, so the sequential
        // verdict inherits the plain one: the bowtie fails both.
        let bowtie = cx(&[&["a", "b", "c"], &["c", "d", "e"]]);
        let v = is_sequentially_serre(&bowtie, 2, &q()).unwrap();
        assert!(!v.holds);
        let w = v.witness.clone().unwrap();
        assert_eq!(w.stratum, Stratum::PureSkeleton(2));
        assert_eq!(w.face, vec!["c".to_string()]);
        assert!(witness_revalidates(&bowtie, &v));

        // Triangle plus disjoint edge: the pure 1-skeleton is disconnected.
        let k2 = cx(&[&["a", "b", "c"], &["d", "e"]]);
        let v2 = is_sequentially_serre(&k2, 2, &q()).unwrap();
        assert!(!v2.holds);
        assert_eq!(v2.witness.as_ref().unwrap().stratum, Stratum::PureSkeleton(1));
        assert!(!is_sequentially_cm(&k2, &q()).unwrap().holds);
        assert!(witness_revalidates(&k2, &v2));
    }

    #[test]
    fn audit_collects_multiple_failures() {
        let k = cx(&[&["a", "b", "c"], &["c", "d", "e"], &["f", "g", "h"]]);
        let failures = serre_failures(&k, 2, &q()).unwrap();
        assert!(failures.len() >= 2);
        // deterministic order: empty face first, then the cut vertex
        assert!(failures[0].face.is_empty());
    }

    #[test]
    fn characteristic_matters_only_with_torsion() {
        let k = sphere2();
        for p in [2u64, 3, 5] {
            assert_eq!(
                is_cm(&k, &gf(p)).unwrap().holds,
                is_cm(&k, &q()).unwrap().holds
            );
        }
    }
}
