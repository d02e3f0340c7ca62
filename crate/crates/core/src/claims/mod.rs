//! Closed-form claims about the named families, and their adjudication
//! against exact oracle values over parameter sweeps.

mod eval;
mod expr;
pub mod golden;
mod registry;
mod report;

pub use eval::{
    evaluate_claim, evaluate_claim_with, nordhaus_gaddum, sweep, sweep_claim, sweep_points,
    ClaimOutcome, Oracle, OracleValues, QuantityOutcome, SweepRequest, Verdict,
};
pub use expr::{Expr, ExprError};
pub use registry::{registry, Claim, Domain, Formula, Provenance, Quantity, Registry};
use std::collections::BTreeMap;

use serde::Serialize;

pub use report::{rows_from_csv, rows_to_csv, ClaimSummary, CsvRow, VerificationReport};

/// All registered claims, optionally narrowed by family and provenance.
pub fn list_claims(
    family: Option<crate::families::Family>,
    provenance: Option<Provenance>,
) -> Vec<&'static Claim> {
    registry()
        .claims()
        .iter()
        .filter(|c| family.is_none_or(|f| c.family == f))
        .filter(|c| provenance.is_none_or(|p| c.provenance == p))
        .collect()
}

/// One registry entry as shown by listings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimListing {
    pub id: String,
    pub family: crate::families::Family,
    pub provenance: Provenance,
    pub domain: String,
    pub note: String,
    pub formulas: BTreeMap<Quantity, String>,
}

impl From<&Claim> for ClaimListing {
    fn from(c: &Claim) -> Self {
        ClaimListing {
            id: c.id.clone(),
            family: c.family,
            provenance: c.provenance,
            domain: c.domain_text(),
            note: c.note.clone(),
            formulas: c.formulas.iter().map(|(q, f)| (*q, f.to_string())).collect(),
        }
    }
}

impl ClaimListing {
    pub fn to_json(entries: &[ClaimListing]) -> String {
        serde_json::to_string_pretty(entries).expect("listing serializes") + "\n"
    }
}
