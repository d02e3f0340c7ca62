use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::eval::{ClaimOutcome, Verdict};
use super::registry::{registry, Quantity};
use crate::error::ClaimError;

/// Per-claim tallies over a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub claim_id: String,
    pub points: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
    /// The smallest evaluated point and its verdict, where boundary effects show up.
    pub smallest_point: Option<String>,
    pub smallest_point_verdict: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub summaries: Vec<ClaimSummary>,
    pub outcomes: Vec<ClaimOutcome>,
}

/// One CSV line: a single quantity at a single point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub claim_id: String,
    pub params: String,
    pub quantity: Quantity,
    pub expected: Option<i64>,
    pub oracle: Option<usize>,
    pub verdict: Verdict,
}

impl VerificationReport {
    /// Sorts outcomes by (registry order, parameters) and tallies them.
    pub fn from_outcomes(mut outcomes: Vec<ClaimOutcome>) -> Self {
        let key = |o: &ClaimOutcome| registry().position(&o.claim_id).unwrap_or(usize::MAX);
        outcomes.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.params.cmp(&b.params)));

        let mut summaries: Vec<ClaimSummary> = Vec::new();
        for o in &outcomes {
            if summaries.last().map(|s| &s.claim_id) != Some(&o.claim_id) {
                summaries.push(ClaimSummary {
                    claim_id: o.claim_id.clone(),
                    points: 0,
                    passed: 0,
                    failed: 0,
                    skipped: 0,
                    first_failure: None,
                    smallest_point: None,
                    smallest_point_verdict: None,
                });
            }
            let s = summaries.last_mut().expect("pushed above");
            s.points += 1;
            match o.verdict {
                Verdict::Pass => s.passed += 1,
                Verdict::Fail => {
                    s.failed += 1;
                    s.first_failure.get_or_insert_with(|| o.params_text());
                }
                Verdict::Skipped => s.skipped += 1,
            }
            if s.smallest_point.is_none() && o.verdict != Verdict::Skipped {
                s.smallest_point = Some(o.params_text());
                s.smallest_point_verdict = Some(o.verdict);
            }
        }
        VerificationReport {
            summaries,
            outcomes,
        }
    }

    pub fn rows(&self) -> Vec<CsvRow> {
        self.outcomes
            .iter()
            .flat_map(|o| {
                let params = o.params_text();
                o.quantities.iter().map(move |q| CsvRow {
                    claim_id: o.claim_id.clone(),
                    params: params.clone(),
                    quantity: q.quantity,
                    expected: q.expected,
                    oracle: q.oracle,
                    verdict: q.verdict,
                })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        rows_to_csv(&self.rows())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("## Summary\n\n");
        out.push_str("| claim | points | pass | fail | skipped | first failure | smallest point |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for s in &self.summaries {
            let smallest = match (&s.smallest_point, s.smallest_point_verdict) {
                (Some(p), Some(v)) => format!("{p} ({})", v.name()),
                _ => "-".into(),
            };
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                s.claim_id,
                s.points,
                s.passed,
                s.failed,
                s.skipped,
                s.first_failure.as_deref().unwrap_or("-"),
                smallest
            )
            .unwrap();
        }

        out.push_str("\n## Details\n\n");
        out.push_str("| claim | params | quantity | expected | oracle | verdict |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        let cell = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        for r in self.rows() {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                r.claim_id,
                r.params,
                r.quantity,
                cell(r.expected.map(|v| v.to_string())),
                cell(r.oracle.map(|v| v.to_string())),
                r.verdict.name()
            )
            .unwrap();
        }

        let failures: Vec<&ClaimOutcome> = self
            .outcomes
            .iter()
            .filter(|o| o.verdict == Verdict::Fail)
            .collect();
        if !failures.is_empty() {
            out.push_str("\n## Failure witnesses\n\n");
            for o in failures {
                let Some(values) = &o.oracle else { continue };
                writeln!(
                    out,
                    "- {} {}: maximum independent set {:?}; in the complement {:?}",
                    o.claim_id,
                    o.params_text(),
                    values.alpha_witness,
                    values.alpha_witness_complement
                )
                .unwrap();
            }
        }
        out
    }
}

pub fn rows_to_csv(rows: &[CsvRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("in-memory CSV write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}

pub fn rows_from_csv(text: &str) -> Result<Vec<CsvRow>, ClaimError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<Vec<CsvRow>, _>>()
        .map_err(|e| ClaimError::Golden(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::{sweep_claim, Oracle};

    #[test]
    fn csv_round_trip_and_layout() {
        let report = sweep_claim("C8", &[3..=3, 3..=4], Oracle::Exact).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("claim_id,params,quantity,expected,oracle,verdict"));
        assert_eq!(lines.next(), Some("C8,m=3;n=3,alpha,,4,SKIPPED"));
        assert_eq!(rows_from_csv(&csv).unwrap(), report.rows());
    }

    #[test]
    fn summary_tracks_failures_and_boundary() {
        let report = sweep_claim("C7a", &[3..=5], Oracle::Exact).unwrap();
        let s = &report.summaries[0];
        assert_eq!((s.points, s.passed, s.failed, s.skipped), (3, 0, 3, 0));
        assert_eq!(s.first_failure.as_deref(), Some("n=3"));
        assert_eq!(s.smallest_point_verdict, Some(Verdict::Fail));

        let md = report.to_markdown();
        assert!(md.contains("| C7a | 3 | 0 | 3 | 0 | n=3 | n=3 (FAIL) |"));
        assert!(md.contains("## Failure witnesses"));
        assert!(md.contains("| C7a | n=4 | ng_sum | 4 | 10 | FAIL |"));
    }

    #[test]
    fn formats_agree_on_verdicts() {
        let report = sweep_claim("C3a", &[3..=6], Oracle::Exact).unwrap();
        let from_csv: Vec<Verdict> = rows_from_csv(&report.to_csv()).unwrap().iter().map(|r| r.verdict).collect();
        let back: VerificationReport = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(back, report);
        let from_json: Vec<Verdict> = back.rows().iter().map(|r| r.verdict).collect();
        assert_eq!(from_csv, from_json);
        let md_fail = report.to_markdown().matches("| FAIL |").count();
        assert_eq!(md_fail, from_csv.iter().filter(|v| **v == Verdict::Fail).count());
    }
}
