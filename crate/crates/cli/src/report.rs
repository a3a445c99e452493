//! JSON report shapes. Bump `SCHEMA_VERSION` on any field change.

use dpforge::{DpReport, SurveyRow};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Row {
    pub n: usize,
    pub total: usize,
    pub successes: usize,
    pub percentage: String,
}

impl From<SurveyRow> for Row {
    fn from(r: SurveyRow) -> Self {
        Row { n: r.n, total: r.total, successes: r.successes, percentage: r.percentage_text() }
    }
}

#[derive(Serialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub survey: &'static str,
    pub rows: Vec<Row>,
}

#[derive(Serialize)]
pub struct Witness {
    pub order: usize,
    pub subset: Option<Vec<usize>>,
}

#[derive(Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum VerifyBody {
    Brute {
        is_dp: bool,
        first_failing_order: Option<usize>,
        witnesses: Vec<Witness>,
    },
    Certificate {
        valid: bool,
        first_failing_order: Option<usize>,
    },
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    #[serde(flatten)]
    pub body: VerifyBody,
}

impl VerifyBody {
    pub fn from_brute(r: &DpReport) -> Self {
        VerifyBody::Brute {
            is_dp: r.is_dp,
            first_failing_order: r.first_failing_order,
            witnesses: r.witnesses.iter().map(|w| Witness { order: w.order, subset: w.subset.clone() }).collect(),
        }
    }
}
