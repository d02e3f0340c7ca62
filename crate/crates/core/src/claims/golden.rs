//! Committed verdict tables produced by the exhaustive oracle.
//!
//! `goldens/<id>.csv` holds, for every claim, the CSV rows of a sweep over
//! the claim's default ranges with [`Oracle::BruteForce`]. `verify` runs the
//! branch-and-bound oracle and compares row by row, so a solver regression
//! shows up as a mismatch.

use std::collections::BTreeMap;

use super::eval::{sweep, Oracle, SweepRequest};
use super::registry::{registry, Quantity};
use super::report::{rows_from_csv, rows_to_csv, CsvRow, VerificationReport};
use crate::error::ClaimError;

const GOLDENS: [(&str, &str); 10] = [
    ("C1", include_str!("../../goldens/C1.csv")),
    ("C2", include_str!("../../goldens/C2.csv")),
    ("C3a", include_str!("../../goldens/C3a.csv")),
    ("C3b", include_str!("../../goldens/C3b.csv")),
    ("C4", include_str!("../../goldens/C4.csv")),
    ("C5", include_str!("../../goldens/C5.csv")),
    ("C6", include_str!("../../goldens/C6.csv")),
    ("C7a", include_str!("../../goldens/C7a.csv")),
    ("C7b", include_str!("../../goldens/C7b.csv")),
    ("C8", include_str!("../../goldens/C8.csv")),
];

/// Committed golden text for `id`.
pub fn golden_csv(id: &str) -> Option<&'static str> {
    GOLDENS.iter().find(|(g, _)| *g == id).map(|(_, text)| *text)
}

pub fn golden_rows() -> Result<Vec<CsvRow>, ClaimError> {
    let mut rows = Vec::new();
    for (_, text) in GOLDENS {
        rows.extend(rows_from_csv(text)?);
    }
    Ok(rows)
}

/// Regenerates every golden file's contents with the exhaustive oracle.
pub fn generate_goldens() -> Result<BTreeMap<String, String>, ClaimError> {
    let requests = registry()
        .claims()
        .iter()
        .map(|c| SweepRequest::default_for(&c.id))
        .collect::<Result<Vec<_>, _>>()?;
    let report = sweep(&requests, Oracle::BruteForce, None)?;
    let rows = report.rows();
    Ok(registry()
        .claims()
        .iter()
        .map(|c| {
            let mine: Vec<CsvRow> = rows.iter().filter(|r| r.claim_id == c.id).cloned().collect();
            (c.id.clone(), rows_to_csv(&mine))
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenMismatch {
    pub golden: CsvRow,
    pub actual: CsvRow,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GoldenCheck {
    /// Rows that had a golden counterpart.
    pub checked: usize,
    /// Rows outside the golden sweep ranges.
    pub unchecked: usize,
    pub mismatches: Vec<GoldenMismatch>,
}

impl GoldenCheck {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every row of `report` that has a golden counterpart.
pub fn check_against_goldens(report: &VerificationReport) -> Result<GoldenCheck, ClaimError> {
    let goldens: BTreeMap<(String, String, Quantity), CsvRow> = golden_rows()?
        .into_iter()
        .map(|r| ((r.claim_id.clone(), r.params.clone(), r.quantity), r))
        .collect();
    let mut check = GoldenCheck::default();
    for row in report.rows() {
        match goldens.get(&(row.claim_id.clone(), row.params.clone(), row.quantity)) {
            Some(golden) => {
                check.checked += 1;
                if *golden != row {
                    check.mismatches.push(GoldenMismatch {
                        golden: golden.clone(),
                        actual: row,
                    });
                }
            }
            None => check.unchecked += 1,
        }
    }
    Ok(check)
}
