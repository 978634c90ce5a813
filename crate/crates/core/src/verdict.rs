//! Verdicts and witnesses shared by the definitional checks and the
//! topological cross-checks.

use std::fmt;

use crate::complex::Complex;
use crate::error::Result;
use crate::homology::reduced_betti;
use crate::linalg::FieldSpec;

/// Which complex a witness refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stratum {
    /// The input complex itself.
    Whole,
    /// The pure m-skeleton of the input.
    PureSkeleton(i64),
    /// The subcomplex generated by facets of dimension ≥ m.
    FacetClosure(i64),
}

impl Stratum {
    /// Materializes the stratum complex from the input complex.
    pub fn resolve(&self, k: &Complex) -> Result<Complex> {
        match self {
            Stratum::Whole => Ok(k.clone()),
            Stratum::PureSkeleton(m) => k.pure_skeleton(*m),
            Stratum::FacetClosure(m) => k.facet_closure(*m),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stratum::Whole => write!(f, "whole complex"),
            Stratum::PureSkeleton(m) => write!(f, "pure {m}-skeleton"),
            Stratum::FacetClosure(m) => write!(f, "facets of dim >= {m}"),
        }
    }
}

/// Which requirement the witness violates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FailedCondition {
    /// β̃_degree(link(σ; stratum)) ≠ 0 below the governing bound.
    LinkHomology,
    /// A facet of sub-top dimension (the face field names it).
    Purity,
    /// Local homology in the witness degree is supported on a face of too
    /// large a dimension.
    LocalHomologyDimension,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailedCondition::LinkHomology => write!(f, "link homology"),
            FailedCondition::Purity => write!(f, "purity"),
            FailedCondition::LocalHomologyDimension => write!(f, "local homology dimension"),
        }
    }
}

/// Which characterization produced a verdict.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Vanishing link homology, checked face by face.
    Definition,
    /// The definitional check applied to every pure skeleton.
    SequentialDefinition,
    /// Purity + global homology + local-homology dimension bounds.
    LocalHomology,
    /// Link homology inside every facet-closure stratum.
    StrataLinks,
    /// Global homology + local-homology bounds per facet-closure stratum.
    StrataLocalHomology,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Definition => "definition",
            Method::SequentialDefinition => "sequential-definition",
            Method::LocalHomology => "local-homology",
            Method::StrataLinks => "strata-links",
            Method::StrataLocalHomology => "strata-local-homology",
        };
        write!(f, "{s}")
    }
}

/// A concrete failure: the face (as original vertex tokens), the degree,
/// the stratum it lives in, and the violated condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    /// σ as original labels; empty for the empty face.
    pub face: Vec<String>,
    /// Failing homology degree i for link-homology witnesses, the local
    /// degree k for dimension witnesses, the facet dimension for purity.
    pub degree: i64,
    pub stratum: Stratum,
    pub condition: FailedCondition,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let face = if self.face.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", self.face.join(","))
        };
        write!(
            f,
            "{} at face {face}, degree {} in {}",
            self.condition, self.degree, self.stratum
        )
    }
}

/// Outcome of one check: the boolean, the parameters, a witness when the
/// property fails, and the characterization that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SerreVerdict {
    pub holds: bool,
    pub r: i64,
    pub field: FieldSpec,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl SerreVerdict {
    pub(crate) fn passed(r: i64, field: FieldSpec, method: Method) -> Self {
        SerreVerdict {
            holds: true,
            r,
            field,
            witness: None,
            method,
        }
    }

    pub(crate) fn failed(r: i64, field: FieldSpec, method: Method, witness: Witness) -> Self {
        SerreVerdict {
            holds: false,
            r,
            field,
            witness: Some(witness),
            method,
        }
    }
}

/// Re-validates a failed verdict's witness by direct Betti computations,
/// independently of the scan that found it. A verdict that holds has
/// nothing to validate and returns true.
pub fn witness_revalidates(k: &Complex, verdict: &SerreVerdict) -> bool {
    let Some(w) = &verdict.witness else {
        return verdict.holds;
    };
    if verdict.holds {
        return false;
    }
    let Ok(stratum) = w.stratum.resolve(k) else {
        return false;
    };
    let Some(sigma) = stratum.face_from_labels(&w.face) else {
        return false;
    };
    if !stratum.contains_face(&sigma) {
        return false;
    }
    let field = verdict.field;
    let r = verdict.r;
    match w.condition {
        FailedCondition::LinkHomology => {
            let bound = match w.stratum {
                Stratum::Whole | Stratum::PureSkeleton(_) => {
                    let d = stratum.dim_int() + 1;
                    (r - 1).min(d - sigma.dim() - 2)
                }
                Stratum::FacetClosure(m) => (m - sigma.dim() - 1).min(r - 1),
            };
            if !(-1..bound).contains(&w.degree) {
                return false;
            }
            let Ok(link) = stratum.link(&sigma) else {
                return false;
            };
            reduced_betti(&link, w.degree, &field) != 0
        }
        FailedCondition::Purity => {
            !stratum.is_pure()
                && stratum
                    .facets()
                    .iter()
                    .any(|f| *f == sigma && f.dim() == w.degree && f.dim() < stratum.dim_int())
        }
        FailedCondition::LocalHomologyDimension => {
            if sigma.is_empty() {
                return false;
            }
            let Ok(link) = stratum.link(&sigma) else {
                return false;
            };
            let listed = reduced_betti(&link, w.degree - sigma.dim() - 1, &field) != 0;
            listed && sigma.dim() > w.degree - r
        }
    }
}
