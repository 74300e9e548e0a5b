//! Report and config (de)serialization.
//!
//! JSON report schema, one object per case:
//!
//! ```json
//! {
//!   "theorem_id": "T2",
//!   "variant": "corrected",
//!   "params": {"a_list": [1.0, 1.0], "beta_list": [2.0], "p": 0.5,
//!              "delta": 1.0, "mu": 2.5, "b": 1.0, "y": 0.5},
//!   "lhs": {"value": ..., "error_estimate": ..., "evaluations": ...},
//!   "rhs": {"prefactor": ..., "series_value": ..., "terms_used": ...,
//!           "tail_estimate": ...},
//!   "abs_diff": ..., "rel_diff": ..., "tolerance_used": ...,
//!   "verdict": "pass", "errata_note": null
//! }
//! ```
//!
//! A config file is a JSON array of `{theorem_id, variant?, params}` objects
//! with the same `params` block. CSV output flattens the same fields, one
//! header row, lists joined with `;`.

use serde::{Deserialize, Serialize};

use exthyp::{IdentityCase, IdentityReport, TheoremId, Variant};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub a_list: Vec<f64>,
    pub beta_list: Vec<f64>,
    pub p: f64,
    pub delta: f64,
    pub mu: f64,
    pub b: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseRecord {
    pub theorem_id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    pub params: ParamsRecord,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LhsRecord {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RhsRecord {
    pub prefactor: f64,
    pub series_value: f64,
    pub terms_used: u32,
    pub tail_estimate: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRecord {
    pub theorem_id: String,
    pub variant: String,
    pub params: ParamsRecord,
    pub lhs: LhsRecord,
    pub rhs: RhsRecord,
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tolerance_used: f64,
    pub verdict: String,
    pub errata_note: Option<String>,
}

/// The subset of a report that `summarize` needs; unknown fields are
/// ignored so the command tolerates schema growth.
#[derive(Debug, Clone, Deserialize)]
pub struct SummaryRecord {
    pub verdict: String,
    #[serde(default)]
    pub theorem_id: String,
    #[serde(default)]
    pub variant: String,
    #[serde(default)]
    pub errata_note: Option<String>,
}

pub fn parse_theorem_id(s: &str) -> Result<TheoremId, String> {
    match s.to_ascii_uppercase().as_str() {
        "T1" => Ok(TheoremId::T1),
        "T2" => Ok(TheoremId::T2),
        "C31" => Ok(TheoremId::C31),
        "C32" => Ok(TheoremId::C32),
        "C33" => Ok(TheoremId::C33),
        "C34" => Ok(TheoremId::C34),
        other => Err(format!(
            "unknown theorem id '{other}' (expected T1, T2, C31, C32, C33 or C34)"
        )),
    }
}

pub fn parse_variant(s: &str) -> Result<Variant, String> {
    match s.to_ascii_lowercase().as_str() {
        "corrected" => Ok(Variant::Corrected),
        "printed" | "as_printed" | "as-printed" => Ok(Variant::AsPrinted),
        other => Err(format!(
            "unknown variant '{other}' (expected printed or corrected)"
        )),
    }
}

impl CaseRecord {
    /// Build the library case; `fallback` supplies the variant when the
    /// record does not name one.
    pub fn to_case(&self, fallback: Variant) -> Result<IdentityCase, String> {
        let theorem_id = parse_theorem_id(&self.theorem_id)?;
        let variant = match &self.variant {
            Some(v) => parse_variant(v)?,
            None => fallback,
        };
        if self.params.a_list.is_empty() {
            return Err("a_list must contain at least the extended parameter a1".into());
        }
        Ok(IdentityCase {
            theorem_id,
            first_numerator: exthyp::ExtendedParameter::new(self.params.a_list[0], self.params.p)
                .map_err(|e| e.to_string())?,
            other_numerators: self.params.a_list[1..].to_vec(),
            denominators: self.params.beta_list.clone(),
            delta: self.params.delta,
            mu: self.params.mu,
            b: self.params.b,
            y: self.params.y,
            variant,
        })
    }
}

pub fn params_of(case: &IdentityCase) -> ParamsRecord {
    let mut a_list = vec![case.first_numerator.value];
    a_list.extend_from_slice(&case.other_numerators);
    ParamsRecord {
        a_list,
        beta_list: case.denominators.clone(),
        p: case.first_numerator.extension,
        delta: case.delta,
        mu: case.mu,
        b: case.b,
        y: case.y,
    }
}

pub fn record_of(report: &IdentityReport) -> ReportRecord {
    ReportRecord {
        theorem_id: report.case.theorem_id.as_str().to_string(),
        variant: report.case.variant.as_str().to_string(),
        params: params_of(&report.case),
        lhs: LhsRecord {
            value: report.lhs.value,
            error_estimate: report.lhs.error_estimate,
            evaluations: report.lhs.evaluations,
        },
        rhs: RhsRecord {
            prefactor: report.rhs_prefactor,
            series_value: report.rhs.value,
            terms_used: report.rhs.terms_used,
            tail_estimate: report.rhs.tail_estimate,
        },
        abs_diff: report.abs_diff,
        rel_diff: report.rel_diff,
        tolerance_used: report.tolerance_used,
        verdict: report.verdict.as_str().to_string(),
        errata_note: report.errata_note.clone(),
    }
}

const CSV_HEADER: &str = "theorem_id,variant,a_list,beta_list,p,delta,mu,b,y,\
lhs_value,lhs_error_estimate,lhs_evaluations,rhs_prefactor,rhs_series_value,\
rhs_terms_used,rhs_tail_estimate,abs_diff,rel_diff,tolerance_used,verdict,errata_note";

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn join_list(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn to_csv(records: &[ReportRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let fields = [
            r.theorem_id.clone(),
            r.variant.clone(),
            join_list(&r.params.a_list),
            join_list(&r.params.beta_list),
            r.params.p.to_string(),
            r.params.delta.to_string(),
            r.params.mu.to_string(),
            r.params.b.to_string(),
            r.params.y.to_string(),
            r.lhs.value.to_string(),
            r.lhs.error_estimate.to_string(),
            r.lhs.evaluations.to_string(),
            r.rhs.prefactor.to_string(),
            r.rhs.series_value.to_string(),
            r.rhs.terms_used.to_string(),
            r.rhs.tail_estimate.to_string(),
            r.abs_diff.to_string(),
            r.rel_diff.to_string(),
            r.tolerance_used.to_string(),
            r.verdict.clone(),
            r.errata_note.clone().unwrap_or_default(),
        ];
        let line: Vec<String> = fields.iter().map(|f| csv_escape(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Verdict counts of a report set.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub errata_flagged: usize,
}

impl VerdictCounts {
    pub fn tally<'a, I: IntoIterator<Item = (&'a str, bool)>>(items: I) -> Self {
        let mut counts = VerdictCounts::default();
        for (verdict, flagged) in items {
            counts.total += 1;
            match verdict {
                "pass" => counts.pass += 1,
                "fail" => counts.fail += 1,
                _ => counts.inconclusive += 1,
            }
            if flagged {
                counts.errata_flagged += 1;
            }
        }
        counts
    }

    pub fn summary_line(&self) -> String {
        format!(
            "total={} pass={} fail={} inconclusive={} errata_flagged={}",
            self.total, self.pass, self.fail, self.inconclusive, self.errata_flagged
        )
    }
}
