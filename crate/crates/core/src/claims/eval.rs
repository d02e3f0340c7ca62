use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::registry::{registry, Claim, Quantity};
use super::report::VerificationReport;
use crate::error::ClaimError;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::invariants::{alpha_bruteforce, alpha_exact, beta, MaxIndependentSet};

/// `(beta(G) + beta(complement), beta(G) * beta(complement))`.
pub fn nordhaus_gaddum(g: &Graph) -> (usize, usize) {
    let (b, b_c) = (beta(g), beta(&g.complement()));
    (b + b_c, b * b_c)
}

/// Which independence-number solver supplies the oracle values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Oracle {
    /// Branch and bound; no size limit.
    #[default]
    Exact,
    /// Exhaustive search; instances beyond its guard are skipped.
    BruteForce,
}

impl Oracle {
    fn alpha(self, g: &Graph) -> Result<MaxIndependentSet, String> {
        match self {
            Oracle::Exact => Ok(alpha_exact(g)),
            Oracle::BruteForce => alpha_bruteforce(g).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

/// Oracle-computed invariants of one family instance and its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValues {
    pub n: usize,
    pub alpha: usize,
    pub alpha_complement: usize,
    pub beta: usize,
    pub beta_complement: usize,
    pub ng_sum: usize,
    pub ng_product: usize,
    pub alpha_witness: Vec<usize>,
    pub alpha_witness_complement: Vec<usize>,
}

impl OracleValues {
    fn compute(g: &Graph, oracle: Oracle) -> Result<Self, String> {
        let n = g.vertex_count();
        let a = oracle.alpha(g)?;
        let a_c = oracle.alpha(&g.complement())?;
        let (b, b_c) = (n - a.size, n - a_c.size);
        Ok(OracleValues {
            n,
            alpha: a.size,
            alpha_complement: a_c.size,
            beta: b,
            beta_complement: b_c,
            ng_sum: b + b_c,
            ng_product: b * b_c,
            alpha_witness: a.witness,
            alpha_witness_complement: a_c.witness,
        })
    }

    pub fn get(&self, q: Quantity) -> usize {
        match q {
            Quantity::Alpha => self.alpha,
            Quantity::AlphaComplement => self.alpha_complement,
            Quantity::Beta => self.beta,
            Quantity::BetaComplement => self.beta_complement,
            Quantity::NgSum => self.ng_sum,
            Quantity::NgProduct => self.ng_product,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantityOutcome {
    pub quantity: Quantity,
    /// Absent when the point is outside the claim's domain.
    pub expected: Option<i64>,
    /// Absent when the oracle could not run.
    pub oracle: Option<usize>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub claim_id: String,
    pub params: Vec<usize>,
    pub verdict: Verdict,
    /// Why the point was skipped, if it was.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub quantities: Vec<QuantityOutcome>,
    pub oracle: Option<OracleValues>,
}

impl ClaimOutcome {
    /// Parameters as `n=4` or `m=2;n=3`.
    pub fn params_text(&self) -> String {
        let names = registry()
            .get(&self.claim_id)
            .map(|c| c.parameter_names())
            .unwrap_or(&["m", "n"]);
        format_params(names, &self.params)
    }
}

pub(crate) fn format_params(names: &[&str], params: &[usize]) -> String {
    names
        .iter()
        .zip(params)
        .map(|(name, p)| format!("{name}={p}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Evaluates claim `id` at `params` against the branch-and-bound oracle.
pub fn evaluate_claim(id: &str, params: &[usize]) -> Result<ClaimOutcome, ClaimError> {
    evaluate_claim_with(id, params, Oracle::Exact)
}

pub fn evaluate_claim_with(
    id: &str,
    params: &[usize],
    oracle: Oracle,
) -> Result<ClaimOutcome, ClaimError> {
    let claim = registry().get(id)?;
    let arity = claim.family.arity();
    if params.len() != arity {
        return Err(ClaimError::Registry {
            id: id.to_string(),
            message: format!("expected {arity} parameter(s), got {}", params.len()),
        });
    }
    evaluate(claim, &claim.canonical(params), oracle)
}

fn evaluate(claim: &Claim, params: &[usize], oracle: Oracle) -> Result<ClaimOutcome, ClaimError> {
    let spec = FamilySpec::new(claim.family, params.to_vec());
    let values = match &spec {
        Ok(spec) => OracleValues::compute(&spec.build(), oracle),
        Err(e) => Err(e.to_string()),
    };
    let skip_reason = match (claim.check_domain(params), &values) {
        (Err(reason), _) => Some(reason),
        (Ok(()), Err(reason)) => Some(reason.clone()),
        (Ok(()), Ok(_)) => None,
    };
    let values = values.ok();

    let mut quantities = Vec::with_capacity(claim.formulas.len());
    for (&quantity, formula) in &claim.formulas {
        let oracle_value = values.as_ref().map(|v| v.get(quantity));
        let (expected, verdict) = match (&skip_reason, oracle_value) {
            (None, Some(actual)) => {
                let expected = formula.eval(claim.parameter_names(), params)?;
                let verdict = if expected == actual as i64 {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                };
                (Some(expected), verdict)
            }
            _ => (None, Verdict::Skipped),
        };
        quantities.push(QuantityOutcome {
            quantity,
            expected,
            oracle: oracle_value,
            verdict,
        });
    }

    let verdict = if skip_reason.is_some() {
        Verdict::Skipped
    } else if quantities.iter().all(|q| q.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(ClaimOutcome {
        claim_id: claim.id.clone(),
        params: params.to_vec(),
        verdict,
        reason: skip_reason,
        quantities,
        oracle: values,
    })
}

/// Parameter points of a sweep: the product of `ranges` in lexicographic
/// order, keeping only canonical points for claims with sorted parameters.
pub fn sweep_points(claim: &Claim, ranges: &[RangeInclusive<usize>]) -> Vec<Vec<usize>> {
    let mut points: Vec<Vec<usize>> = vec![Vec::new()];
    for range in ranges {
        points = points
            .into_iter()
            .flat_map(|prefix| {
                range.clone().map(move |p| {
                    let mut point = prefix.clone();
                    point.push(p);
                    point
                })
            })
            .collect();
    }
    points.retain(|p| claim.canonical(p) == *p);
    points
}

/// One sweep request: a claim and the inclusive range of each parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRequest {
    pub claim_id: String,
    pub ranges: Vec<RangeInclusive<usize>>,
}

impl SweepRequest {
    /// The claim's registered default ranges.
    pub fn default_for(id: &str) -> Result<Self, ClaimError> {
        let claim = registry().get(id)?;
        Ok(SweepRequest {
            claim_id: claim.id.clone(),
            ranges: claim.sweep.clone(),
        })
    }
}

/// Evaluates every request at every point, in parallel on `threads` workers
/// (rayon's default when `None`). Output order does not depend on scheduling.
pub fn sweep(
    requests: &[SweepRequest],
    oracle: Oracle,
    threads: Option<usize>,
) -> Result<VerificationReport, ClaimError> {
    let mut jobs = Vec::new();
    for request in requests {
        let claim = registry().get(&request.claim_id)?;
        if request.ranges.len() != claim.family.arity() {
            return Err(ClaimError::Registry {
                id: claim.id.clone(),
                message: format!("sweep needs {} range(s)", claim.family.arity()),
            });
        }
        jobs.extend(sweep_points(claim, &request.ranges).into_iter().map(|p| (claim, p)));
    }

    let run = || {
        jobs.par_iter()
            .map(|(claim, params)| evaluate(claim, params, oracle))
            .collect::<Result<Vec<_>, _>>()
    };
    let outcomes = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| ClaimError::Registry {
                id: "<sweep>".into(),
                message: e.to_string(),
            })?
            .install(run),
        None => run(),
    }?;
    Ok(VerificationReport::from_outcomes(outcomes))
}

/// Sweeps a single claim over `ranges`.
pub fn sweep_claim(
    id: &str,
    ranges: &[RangeInclusive<usize>],
    oracle: Oracle,
) -> Result<VerificationReport, ClaimError> {
    sweep(
        &[SweepRequest {
            claim_id: id.to_string(),
            ranges: ranges.to_vec(),
        }],
        oracle,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn expected(outcome: &ClaimOutcome, q: Quantity) -> Option<i64> {
        outcome.quantities.iter().find(|o| o.quantity == q).unwrap().expected
    }

    #[test]
    fn nordhaus_gaddum_examples() {
        assert_eq!(nordhaus_gaddum(&Graph::complete(5)), (4, 0));
        assert_eq!(nordhaus_gaddum(&families::complete_bipartite(2, 3).unwrap()), (5, 6));
        assert_eq!(nordhaus_gaddum(&families::complete_sun(3).unwrap()), (6, 9));
    }

    #[test]
    fn complete_graph_claim_passes() {
        let o = evaluate_claim("C1", &[6]).unwrap();
        assert_eq!(o.verdict, Verdict::Pass);
        assert_eq!(o.quantities.len(), 2);
        assert_eq!(o.params_text(), "n=6");
    }

    #[test]
    fn helm_sum_compares_against_three_n_minus_two() {
        let o = evaluate_claim("C4", &[4]).unwrap();
        let sum = o.quantities.iter().find(|q| q.quantity == Quantity::NgSum).unwrap();
        assert_eq!(sum.expected, Some(10));
        // Oracle: helm(4) has alpha 5 and its complement alpha 3, so 4 + 6.
        assert_eq!(sum.oracle, Some(10));
        assert_eq!(o.verdict, Verdict::Pass);
    }

    #[test]
    fn wheel_statement_and_derivation_disagree() {
        let stated = evaluate_claim("C3a", &[4]).unwrap();
        let derived = evaluate_claim("C3b", &[4]).unwrap();
        assert_eq!(expected(&stated, Quantity::NgSum), Some(9));
        let derived_values = derived.oracle.as_ref().unwrap();
        // The derived beta and complement cover give 3 + 2.
        assert_eq!(derived_values.ng_sum, 5);
        assert_eq!(stated.verdict, Verdict::Fail);
        assert_eq!(derived.verdict, Verdict::Pass);
    }

    #[test]
    fn out_of_domain_points_are_skipped_with_oracle_values() {
        let o = evaluate_claim("C8", &[3, 5]).unwrap();
        assert_eq!(o.verdict, Verdict::Skipped);
        assert!(o.quantities.iter().all(|q| q.expected.is_none() && q.oracle.is_some()));
        assert!(o.reason.as_deref().unwrap().contains("odd"));

        let o = evaluate_claim("C3a", &[2]).unwrap();
        assert_eq!(o.verdict, Verdict::Skipped);
        assert!(o.oracle.is_none());
    }

    #[test]
    fn bipartite_parameters_are_canonicalized() {
        let o = evaluate_claim("C2", &[5, 2]).unwrap();
        assert_eq!(o.params, vec![2, 5]);
        assert_eq!(o.verdict, Verdict::Pass);
    }

    #[test]
    fn bruteforce_guard_becomes_skip() {
        let o = evaluate_claim_with("C6", &[13], Oracle::BruteForce).unwrap();
        assert_eq!(o.verdict, Verdict::Skipped);
        assert!(o.reason.unwrap().contains("guard"));
    }

    #[test]
    fn errors() {
        assert!(matches!(evaluate_claim("C0", &[3]), Err(ClaimError::UnknownClaim(_))));
        assert!(evaluate_claim("C8", &[3]).is_err());
    }

    #[test]
    fn sweep_examples() {
        let r = sweep_claim("C6", &[3..=8], Oracle::Exact).unwrap();
        assert_eq!(r.outcomes.len(), 6);
        assert!(r.outcomes.iter().all(|o| o.verdict == Verdict::Pass));

        let r = sweep_claim("C8", &[2..=4, 3..=6], Oracle::Exact).unwrap();
        assert_eq!(r.outcomes.len(), 12);
        let skipped: Vec<_> = r
            .outcomes
            .iter()
            .filter(|o| o.verdict == Verdict::Skipped)
            .map(|o| o.params.clone())
            .collect();
        assert_eq!(skipped, vec![vec![3, 3], vec![3, 5]]);
    }

    #[test]
    fn canonical_sweep_points() {
        let c2 = registry().get("C2").unwrap();
        assert_eq!(sweep_points(c2, &[1..=3, 1..=3]).len(), 6);
        let c8 = registry().get("C8").unwrap();
        assert_eq!(sweep_points(c8, &[2..=3, 3..=4]), vec![vec![2, 3], vec![2, 4], vec![3, 3], vec![3, 4]]);
    }
}
