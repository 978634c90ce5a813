//! Report data shared by the JSON and human renderings.
//!
//! The JSON schema is stable: every command emits `{"command", "complex",
//! ...}` with witnesses as vertex-label lists and Betti arrays indexed from
//! degree −1. The human output is generated from the same structs, so the
//! two renderings always carry identical verdict data.

use serde::Serialize;
use serre_core::{
    Complex, FieldSpec, HomologyProfile, SerreVerdict, Stratum, Witness,
};

#[derive(Serialize, Clone)]
pub struct ComplexInfo {
    pub input: String,
    pub n_vertices: usize,
    pub n_facets: usize,
    /// `null` for the void complex; −1 for `{∅}`.
    pub dim: Option<i64>,
}

impl ComplexInfo {
    pub fn new(identity: &str, k: &Complex) -> Self {
        ComplexInfo {
            input: identity.to_string(),
            n_vertices: k.n_vertices(),
            n_facets: k.facets().len(),
            dim: (!k.is_void()).then(|| k.dim_int()),
        }
    }

    pub fn describe(&self) -> String {
        match self.dim {
            None => format!("{}: void complex", self.input),
            Some(d) => format!(
                "{}: {} vertices, {} facets, dimension {}",
                self.input, self.n_vertices, self.n_facets, d
            ),
        }
    }
}

#[derive(Serialize, Clone)]
pub struct BettiReport {
    pub field: String,
    pub from_degree: i64,
    pub betti: Vec<usize>,
}

impl BettiReport {
    pub fn new(profile: &HomologyProfile) -> Self {
        BettiReport {
            field: profile.field().to_string(),
            from_degree: -1,
            betti: profile.degrees().map(|(_, b)| b).collect(),
        }
    }

    pub fn describe(&self) -> String {
        let nums: Vec<String> = self.betti.iter().map(|b| b.to_string()).collect();
        format!(
            "betti over {} (degrees {}..): {}",
            self.field,
            self.from_degree,
            if nums.is_empty() {
                "none".to_string()
            } else {
                nums.join(" ")
            }
        )
    }
}

#[derive(Serialize, Clone)]
pub struct StratumReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
}

impl From<Stratum> for StratumReport {
    fn from(s: Stratum) -> Self {
        match s {
            Stratum::Whole => StratumReport {
                kind: "whole".into(),
                m: None,
            },
            Stratum::PureSkeleton(m) => StratumReport {
                kind: "pure-skeleton".into(),
                m: Some(m),
            },
            Stratum::FacetClosure(m) => StratumReport {
                kind: "facet-closure".into(),
                m: Some(m),
            },
        }
    }
}

#[derive(Serialize, Clone)]
pub struct WitnessReport {
    pub face: Vec<String>,
    pub degree: i64,
    pub stratum: StratumReport,
    pub condition: String,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> Self {
        WitnessReport {
            face: w.face.clone(),
            degree: w.degree,
            stratum: w.stratum.into(),
            condition: w.condition.to_string(),
        }
    }
}

#[derive(Serialize, Clone)]
pub struct VerdictReport {
    pub property: String,
    pub r: i64,
    pub field: String,
    pub holds: bool,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    /// Present on failures: whether the witness re-checked independently.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub revalidated: Option<bool>,
}

impl VerdictReport {
    pub fn new(property: &str, k: &Complex, v: &SerreVerdict) -> Self {
        VerdictReport {
            property: property.to_string(),
            r: v.r,
            field: v.field.to_string(),
            holds: v.holds,
            method: v.method.to_string(),
            witness: v.witness.as_ref().map(WitnessReport::from),
            revalidated: (!v.holds).then(|| serre_core::witness_revalidates(k, v)),
        }
    }

    pub fn describe(&self) -> String {
        let mut line = format!(
            "{} (r={}) over {}: {}",
            self.property,
            self.r,
            self.field,
            if self.holds { "holds" } else { "FAILS" }
        );
        if let Some(w) = &self.witness {
            let face = if w.face.is_empty() {
                "∅".to_string()
            } else {
                format!("{{{}}}", w.face.join(","))
            };
            let stratum = match (&w.stratum.kind[..], w.stratum.m) {
                ("whole", _) => "whole complex".to_string(),
                (kind, Some(m)) => format!("{kind} m={m}"),
                (kind, None) => kind.to_string(),
            };
            line.push_str(&format!(
                "  [witness: {} at {face}, degree {}, {stratum}; revalidated: {}]",
                w.condition,
                w.degree,
                self.revalidated.unwrap_or(false)
            ));
        }
        line
    }
}

#[derive(Serialize, Clone, Copy, Default)]
pub struct Timing {
    pub parse_ms: f64,
    pub compute_ms: f64,
}

#[derive(Serialize)]
pub struct HomologyReport {
    pub command: &'static str,
    pub complex: ComplexInfo,
    pub profiles: Vec<BettiReport>,
    pub timing: Timing,
}

#[derive(Serialize)]
pub struct CheckReport {
    pub command: &'static str,
    pub complex: ComplexInfo,
    pub mode: String,
    pub verdict: VerdictReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Vec<WitnessReport>>,
    pub timing: Timing,
}

#[derive(Serialize, Clone)]
pub struct OracleRow {
    pub r: i64,
    pub serre_definition: bool,
    pub serre_local_homology: bool,
    pub sequential_definition: bool,
    pub sequential_strata_links: bool,
    pub sequential_strata_local_homology: bool,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub command: &'static str,
    pub complex: ComplexInfo,
    pub field: String,
    pub rows: Vec<OracleRow>,
    pub all_agree: bool,
    pub timing: Timing,
}

#[derive(Serialize, Clone)]
pub struct ProfileRow {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_serre_r: Option<i64>,
    pub is_cm: bool,
    pub is_sequentially_cm: bool,
}

#[derive(Serialize)]
pub struct ProfileReport {
    pub command: &'static str,
    pub complex: ComplexInfo,
    pub rows: Vec<ProfileRow>,
    pub timing: Timing,
}

/// Agreement summary for a generated corpus run.
#[derive(Serialize)]
pub struct CorpusReport {
    pub command: &'static str,
    pub count: u32,
    pub seed: u64,
    pub field: String,
    pub checked: usize,
    pub disagreements: Vec<String>,
    pub all_agree: bool,
    pub timing: Timing,
}

pub fn field_list(spec: &str) -> Result<Vec<FieldSpec>, serre_core::Error> {
    spec.split(',')
        .map(|s| s.trim().parse::<FieldSpec>())
        .collect()
}
