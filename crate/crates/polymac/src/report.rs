//! Machine-readable reports. Every number is serialized exactly: rationals
//! as `"p/q"` strings, cyclotomic values as `{order, coeffs}` objects.
//! Identical inputs produce byte-identical JSON.

use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNumber;
use crate::decomposition::{TermList, VerifyOutcome, Weights};
use crate::em1d::{IdentityReport, SectorReport};
use crate::empoly::{ConsistencyRun, EmPolyRun};
use crate::polytope::Polytope;
use crate::rational::{format_rational, Rational};

/// An exact scalar: a rational rendered as a string, or a cyclotomic
/// element with its coefficient vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExactValue {
    Rational(String),
    Cyclo(CycloNumber),
}

impl From<&CycloNumber> for ExactValue {
    fn from(c: &CycloNumber) -> Self {
        match c.as_rational() {
            Some(r) => ExactValue::Rational(format_rational(&r)),
            None => ExactValue::Cyclo(c.clone()),
        }
    }
}

pub fn point_strings(x: &[Rational]) -> Vec<String> {
    x.iter().map(format_rational).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermEntry {
    pub face: Vec<usize>,
    pub dim: usize,
    pub sign: i8,
    pub phi: bool,
    pub m_flips: usize,
    pub flips: Vec<bool>,
    pub base_projection: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointCheck {
    pub point: Vec<String>,
    pub expected: ExactValue,
    pub got: ExactValue,
    pub ok: bool,
    /// Signed weighted contribution of each term, in term-list order.
    pub term_values: Vec<ExactValue>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub command: String,
    pub polytope: String,
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<String>>,
    pub weights: Vec<ExactValue>,
    pub seed: u64,
    pub num_points: usize,
    pub failures: usize,
    pub ok: bool,
    pub terms: Vec<TermEntry>,
    pub points: Vec<PointCheck>,
}

pub fn decomposition_report(
    command: &str,
    polytope_name: &str,
    p: &Polytope,
    w: &Weights,
    terms: &TermList,
    outcome: &VerifyOutcome,
    seed: u64,
) -> DecompositionReport {
    DecompositionReport {
        command: command.to_string(),
        polytope: polytope_name.to_string(),
        variant: terms.kind.clone(),
        epsilon: terms.epsilon.as_ref().map(|e| point_strings(e)),
        weights: w.q.iter().map(ExactValue::from).collect(),
        seed,
        num_points: outcome.points.len(),
        failures: outcome.failures(),
        ok: outcome.ok(),
        terms: terms
            .terms
            .iter()
            .map(|t| TermEntry {
                face: t.cone.jset.clone(),
                dim: p.face(t.face_id).dim,
                sign: t.sign,
                phi: t.phi,
                m_flips: t.cone.m_flips,
                flips: t.cone.flips.clone(),
                base_projection: point_strings(&t.cone.base_projection),
            })
            .collect(),
        points: outcome
            .points
            .iter()
            .map(|pt| PointCheck {
                point: point_strings(&pt.point),
                expected: ExactValue::from(&pt.expected),
                got: ExactValue::from(&pt.got),
                ok: pt.ok(),
                term_values: pt.term_values.iter().map(ExactValue::from).collect(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Em1dReport {
    pub command: String,
    pub identity: String,
    pub lhs: ExactValue,
    pub main: ExactValue,
    pub remainder: ExactValue,
    pub ok: bool,
}

pub fn em1d_report(command: &str, rep: &IdentityReport) -> Em1dReport {
    Em1dReport {
        command: command.to_string(),
        identity: rep.kind.clone(),
        lhs: ExactValue::from(&rep.lhs),
        main: ExactValue::from(&rep.main),
        remainder: ExactValue::from(&rep.remainder),
        ok: rep.holds(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectorAxisEntry {
    pub identity: String,
    pub lhs: ExactValue,
    pub main: ExactValue,
    pub remainder: ExactValue,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectorReportJson {
    pub command: String,
    pub axes: Vec<SectorAxisEntry>,
    pub main: ExactValue,
    pub remainder: ExactValue,
    pub enumerated: ExactValue,
    pub ok: bool,
}

pub fn sector_report(command: &str, rep: &SectorReport) -> SectorReportJson {
    SectorReportJson {
        command: command.to_string(),
        axes: rep
            .per_axis
            .iter()
            .map(|r| SectorAxisEntry {
                identity: r.kind.clone(),
                lhs: ExactValue::from(&r.lhs),
                main: ExactValue::from(&r.main),
                remainder: ExactValue::from(&r.remainder),
            })
            .collect(),
        main: ExactValue::from(&rep.main),
        remainder: ExactValue::from(&rep.remainder),
        enumerated: ExactValue::from(&rep.lhs_enumerated),
        ok: rep.holds(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContributionEntry {
    pub face: Vec<usize>,
    pub element: Vec<String>,
    pub value: ExactValue,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmPolyReport {
    pub command: String,
    pub polytope: String,
    pub weights: Vec<ExactValue>,
    pub poly: String,
    pub truncation: usize,
    pub field_order: u64,
    pub formula: ExactValue,
    pub oracle: ExactValue,
    pub ok: bool,
    pub rational_certified: bool,
    pub contributions: Vec<ContributionEntry>,
}

pub fn em_poly_report(
    command: &str,
    polytope_name: &str,
    w: &Weights,
    poly_text: &str,
    run: &EmPolyRun,
) -> EmPolyReport {
    EmPolyReport {
        command: command.to_string(),
        polytope: polytope_name.to_string(),
        weights: w.q.iter().map(ExactValue::from).collect(),
        poly: poly_text.to_string(),
        truncation: run.truncation,
        field_order: run.field_order,
        formula: ExactValue::from(&run.formula),
        oracle: ExactValue::from(&run.oracle),
        ok: run.matches(),
        rational_certified: run.formula.is_rational(),
        contributions: run
            .contributions
            .iter()
            .map(|(face, b, v)| ContributionEntry {
                face: face.clone(),
                element: b.iter().map(format_rational).collect(),
                value: ExactValue::from(v),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConsistencyReportJson {
    pub command: String,
    pub decomposition_checks: Vec<(String, String, bool)>,
    pub dilation_bookkeeping_ok: bool,
    pub zero_contribution_ok: bool,
    pub formula_vs_oracle_ok: bool,
    pub ok: bool,
}

pub fn consistency_report(command: &str, run: &ConsistencyRun) -> ConsistencyReportJson {
    ConsistencyReportJson {
        command: command.to_string(),
        decomposition_checks: run.decomposition_checks.clone(),
        dilation_bookkeeping_ok: run.dilation_bookkeeping_ok,
        zero_contribution_ok: run.zero_contribution_ok,
        formula_vs_oracle_ok: run.formula_vs_oracle_ok,
        ok: run.ok(),
    }
}

/// Error report, used with nonzero exit codes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorReport {
    pub command: String,
    pub error: String,
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}
