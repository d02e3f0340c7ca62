//! Loading and validating the claim registry.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::expr::Expr;
use crate::error::ClaimError;
use crate::families::Family;

const REGISTRY_TOML: &str = include_str!("registry.toml");

/// Quantities a claim may assert, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Alpha,
    AlphaComplement,
    Beta,
    BetaComplement,
    NgSum,
    NgProduct,
}

impl Quantity {
    pub const ALL: [Quantity; 6] = [
        Quantity::Alpha,
        Quantity::AlphaComplement,
        Quantity::Beta,
        Quantity::BetaComplement,
        Quantity::NgSum,
        Quantity::NgProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Alpha => "alpha",
            Quantity::AlphaComplement => "alpha_complement",
            Quantity::Beta => "beta",
            Quantity::BetaComplement => "beta_complement",
            Quantity::NgSum => "ng_sum",
            Quantity::NgProduct => "ng_product",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// The closed form as stated for the family.
    TheoremStatement,
    /// Intermediate values the stated closed form was derived from.
    ProofDerived,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::TheoremStatement => "theorem-statement",
            Provenance::ProofDerived => "proof-derived",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Plain(Expr),
    /// Split on the parity of parameter `of`.
    Parity { of: String, even: Expr, odd: Expr },
}

impl Formula {
    pub fn eval(&self, names: &[&str], params: &[usize]) -> Result<i64, ClaimError> {
        let lookup = |name: &str| {
            names
                .iter()
                .position(|&n| n == name)
                .map(|i| params[i] as i128)
        };
        let expr = match self {
            Formula::Plain(e) => e,
            Formula::Parity { of, even, odd } => {
                let value = lookup(of).ok_or_else(|| ClaimError::Formula {
                    formula: self.to_string(),
                    message: format!("unbound parity parameter '{of}'"),
                })?;
                if value % 2 == 0 {
                    even
                } else {
                    odd
                }
            }
        };
        let value = expr.eval(&lookup).map_err(|e| ClaimError::Formula {
            formula: expr.text().to_string(),
            message: e.0,
        })?;
        i64::try_from(value).map_err(|_| ClaimError::Formula {
            formula: expr.text().to_string(),
            message: "value out of range".into(),
        })
    }

    fn variables(&self) -> Vec<&str> {
        match self {
            Formula::Plain(e) => e.variables(),
            Formula::Parity { of, even, odd } => {
                let mut v = even.variables();
                v.extend(odd.variables());
                v.push(of);
                v
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Plain(e) => write!(f, "{e}"),
            Formula::Parity { of, even, odd } => {
                write!(f, "{even} if {of} even; {odd} if {of} odd")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Domain {
    /// Per-parameter minimum, already raised to the family's own minimum.
    pub minimums: Vec<usize>,
    /// Parameters are sorted ascending before anything else happens.
    pub ascending: bool,
    /// Points where every parameter is odd are outside the domain.
    pub exclude_all_odd: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub family: Family,
    pub provenance: Provenance,
    pub note: String,
    pub domain: Domain,
    pub formulas: BTreeMap<Quantity, Formula>,
    /// Default inclusive range per parameter for sweeps.
    pub sweep: Vec<RangeInclusive<usize>>,
}

impl Claim {
    pub fn parameter_names(&self) -> &'static [&'static str] {
        self.family.parameter_names()
    }

    /// Applies the domain's canonical ordering.
    pub fn canonical(&self, params: &[usize]) -> Vec<usize> {
        let mut p = params.to_vec();
        if self.domain.ascending {
            p.sort_unstable();
        }
        p
    }

    /// `Err(reason)` when canonical `params` fall outside the declared domain.
    pub fn check_domain(&self, params: &[usize]) -> Result<(), String> {
        let names = self.parameter_names();
        for ((&p, &min), name) in params.iter().zip(&self.domain.minimums).zip(names) {
            if p < min {
                return Err(format!("{name} = {p} is below {min}"));
            }
        }
        if self.domain.exclude_all_odd && params.iter().all(|p| p % 2 == 1) {
            return Err("no formula when all parameters are odd".into());
        }
        Ok(())
    }

    pub fn domain_text(&self) -> String {
        let names = self.parameter_names();
        let mut parts: Vec<String> = names
            .iter()
            .zip(&self.domain.minimums)
            .map(|(name, min)| format!("{name} >= {min}"))
            .collect();
        if self.domain.ascending {
            parts.push(format!("{} <= {}", names[0], names[1]));
        }
        if self.domain.exclude_all_odd {
            parts.push(format!("not all of {} odd", names.join(", ")));
        }
        parts.join(", ")
    }
}

#[derive(Debug)]
pub struct Registry {
    claims: Vec<Claim>,
}

impl Registry {
    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn get(&self, id: &str) -> Result<&Claim, ClaimError> {
        self.claims
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))
    }

    /// Position of `id` in registry order, used as the primary report sort key.
    pub fn position(&self, id: &str) -> Option<usize> {
        self.claims.iter().position(|c| c.id == id)
    }

    pub fn parse(text: &str) -> Result<Registry, ClaimError> {
        let raw: RawRegistry = toml::from_str(text).map_err(|e| ClaimError::Registry {
            id: "<registry>".into(),
            message: e.to_string(),
        })?;
        let claims = raw
            .claim
            .into_iter()
            .map(RawClaim::validate)
            .collect::<Result<Vec<_>, _>>()?;
        for (i, c) in claims.iter().enumerate() {
            if claims[..i].iter().any(|d| d.id == c.id) {
                return Err(ClaimError::Registry {
                    id: c.id.clone(),
                    message: "duplicate id".into(),
                });
            }
        }
        Ok(Registry { claims })
    }
}

/// The built-in registry.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| Registry::parse(REGISTRY_TOML).expect("built-in registry is valid"))
}

#[derive(Deserialize)]
struct RawRegistry {
    claim: Vec<RawClaim>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClaim {
    id: String,
    family: Family,
    provenance: Provenance,
    note: String,
    #[serde(default)]
    domain: RawDomain,
    sweep: BTreeMap<String, [usize; 2]>,
    formulas: BTreeMap<Quantity, RawFormula>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawDomain {
    #[serde(default)]
    min: BTreeMap<String, usize>,
    #[serde(default)]
    ascending: bool,
    #[serde(default)]
    exclude_all_odd: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawFormula {
    Plain(String),
    Parity {
        even: String,
        odd: String,
        #[serde(default = "default_parity_parameter")]
        of: String,
    },
}

fn default_parity_parameter() -> String {
    "n".into()
}

impl RawClaim {
    fn validate(self) -> Result<Claim, ClaimError> {
        let id = self.id;
        let fail = |message: String| ClaimError::Registry {
            id: id.clone(),
            message,
        };
        let names = self.family.parameter_names();
        let known = |name: &str| names.contains(&name);

        if let Some(bad) = self.domain.min.keys().find(|k| !known(k)) {
            return Err(fail(format!("domain names unknown parameter '{bad}'")));
        }
        if self.domain.ascending && names.len() != 2 {
            return Err(fail("ascending domain needs two parameters".into()));
        }
        let minimums = names
            .iter()
            .zip(self.family.minimums())
            .map(|(name, &fam)| self.domain.min.get(*name).map_or(fam, |&d| d.max(fam)))
            .collect();

        if self.sweep.len() != names.len() || self.sweep.keys().any(|k| !known(k)) {
            return Err(fail(format!("sweep must give a range for each of {names:?}")));
        }
        let sweep = names
            .iter()
            .map(|name| {
                let [lo, hi] = self.sweep[*name];
                lo..=hi
            })
            .collect();

        let mut formulas = BTreeMap::new();
        for (quantity, raw) in self.formulas {
            let parse = |text: &str| {
                Expr::parse(text).map_err(|e| ClaimError::Formula {
                    formula: text.to_string(),
                    message: e.0,
                })
            };
            let formula = match raw {
                RawFormula::Plain(text) => Formula::Plain(parse(&text)?),
                RawFormula::Parity { even, odd, of } => Formula::Parity {
                    of,
                    even: parse(&even)?,
                    odd: parse(&odd)?,
                },
            };
            if let Some(bad) = formula.variables().into_iter().find(|v| !known(v)) {
                return Err(fail(format!("{quantity} uses unknown parameter '{bad}'")));
            }
            formulas.insert(quantity, formula);
        }
        if formulas.is_empty() {
            return Err(fail("no formulas".into()));
        }

        Ok(Claim {
            family: self.family,
            provenance: self.provenance,
            note: self.note,
            domain: Domain {
                minimums,
                ascending: self.domain.ascending,
                exclude_all_odd: self.domain.exclude_all_odd,
            },
            formulas,
            sweep,
            id,
        })
    }
}
