//! Machine-readable output. Coefficients are decimal strings so that values
//! beyond 64 bits survive any JSON reader.

use qcong_core::verify::{Report, Witness};
use qcong_core::{FactoredPoly, IntPoly};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CycloFactor {
    pub cyclo_index: usize,
    pub exponent: u32,
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub family: String,
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factored: Option<Vec<CycloFactor>>,
}

pub fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn factor_list(f: &FactoredPoly) -> Vec<CycloFactor> {
    f.factors()
        .map(|(cyclo_index, exponent)| CycloFactor {
            cyclo_index,
            exponent,
        })
        .collect()
}

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessRecord {
    Poly { coeffs: Vec<String> },
    Integer { value: String },
}

impl WitnessRecord {
    pub fn from_witness(w: &Witness) -> Option<Self> {
        match w {
            Witness::None => None,
            Witness::Poly(p) => Some(WitnessRecord::Poly {
                coeffs: coeff_strings(p),
            }),
            Witness::Integer(i) => Some(WitnessRecord::Integer {
                value: i.to_string(),
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub suite: String,
    pub claim: &'static str,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub status: &'static str,
    pub relation: String,
    pub witness: Option<WitnessRecord>,
}

impl ReportRecord {
    pub fn new(suite: &str, report: &Report) -> Self {
        let params = report
            .params()
            .iter()
            .map(|(name, v)| (name.to_string(), serde_json::Value::from(*v)))
            .collect();
        let status = match (report, report.passed()) {
            (Report::Conjecture(_), true) => "holds",
            (Report::Conjecture(_), false) => "fails",
            (_, true) => "pass",
            (_, false) => "fail",
        };
        ReportRecord {
            suite: suite.to_string(),
            claim: report.claim(),
            params,
            status,
            relation: report.relation(),
            witness: WitnessRecord::from_witness(&report.witness()),
        }
    }
}

#[derive(Debug, Default, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Serialize)]
pub struct SummaryRecord {
    pub command: &'static str,
    pub target: String,
    pub counts: Counts,
    pub reports: Vec<ReportRecord>,
}
