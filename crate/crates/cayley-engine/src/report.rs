use serde::Serialize;

use crate::biquad::{Biquad, BiquadCtx};
use crate::rational::{rat_to_f64, Rat};

/// Which closure criterion produced the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionKind {
    PlanarCayley,
    TwoConicAlternating,
    DDimPeriod,
    TwoEllipsoidGame,
    OnQuadricExample,
}

/// One exact matrix entry serialized for auditability: the numerators and
/// denominators of its components on the basis `{1, u, v, uv}` plus a
/// float embedding.
#[derive(Debug, Clone, Serialize)]
pub struct ReportEntry {
    pub parts: Vec<String>,
    pub value: f64,
}

impl ReportEntry {
    pub fn from_rat(r: &Rat) -> Self {
        ReportEntry {
            parts: vec![format!("{}/{}", r.numer(), r.denom())],
            value: rat_to_f64(r),
        }
    }

    pub fn from_biquad(z: &Biquad, ctx: &BiquadCtx) -> Self {
        ReportEntry {
            parts: [&z.a, &z.b, &z.c, &z.d]
                .iter()
                .map(|r| format!("{}/{}", r.numer(), r.denom()))
                .collect(),
            value: z.value_f64(ctx),
        }
    }
}

/// Outcome of a Cayley-type criterion: the matrix it was decided on, the
/// decisive scalar (determinant value or rank deficit), and the verdict.
/// In exact mode `satisfied` is a statement about rational determinants
/// and ranks; no tolerance is involved and `tolerance` is `None`.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub kind: ConditionKind,
    pub exact: bool,
    pub matrix: Vec<Vec<ReportEntry>>,
    /// Float embedding of the determinant, or the rank deficit for rank
    /// criteria (`required_rank_bound - rank`, positive when satisfied).
    pub verdict: f64,
    pub rank: Option<usize>,
    pub rank_bound: Option<usize>,
    pub satisfied: bool,
    pub tolerance: Option<f64>,
    /// Human-readable note on normalizations or conventions used.
    pub note: String,
}

impl ConditionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
