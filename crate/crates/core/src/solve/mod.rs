//! Exact solvers for `γ_tR`, `γ_t`, `ρ`, `ρ_o` and the TRDF Pareto frontier.

mod bnb;
mod brute;
mod pareto;
mod sets;

use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

use crate::graph::Graph;
use crate::labeling::{LabelFunction, VertexSet};

pub use bnb::{gamma_tr_exact, gamma_tr_max_v2};
pub use brute::{
    gamma_tr_bruteforce, gamma_tr_bruteforce_with_limit, gamma_tr_max_v2_bruteforce,
    BRUTE_FORCE_LIMIT,
};
pub use pareto::{trdf_pareto_frontier, ParetoPoint};
pub use sets::{
    all_maximum_open_packings, eod_set, gamma_t_exact, max_independent_set, rho_exact, rho_o_exact,
};

/// Environment variable holding the default solver budget in seconds.
pub const BUDGET_ENV: &str = "TRD_BUDGET_SECS";

/// Wall-clock limit for a search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget(pub Option<Duration>);

impl Budget {
    pub const UNLIMITED: Budget = Budget(None);

    pub fn secs(secs: u64) -> Self {
        Budget(Some(Duration::from_secs(secs)))
    }

    /// Reads [`BUDGET_ENV`], falling back to `default`.
    pub fn from_env_or(default: Budget) -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|s| s.is_finite() && *s > 0.0)
            .map(|s| Budget(Some(Duration::from_secs_f64(s))))
            .unwrap_or(default)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    GammaTr,
    GammaT,
    Rho,
    RhoO,
}

impl Invariant {
    pub fn as_str(self) -> &'static str {
        match self {
            Invariant::GammaTr => "gamma_tR",
            Invariant::GammaT => "gamma_t",
            Invariant::Rho => "rho",
            Invariant::RhoO => "rho_o",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    BranchAndBound,
    Certificate,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::BranchAndBound => "branch_and_bound",
            Method::Certificate => "certificate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Labeling(LabelFunction),
    Set(VertexSet),
}

/// Optimal value of an invariant together with a witness achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: u32,
    pub witness: Witness,
    pub method: Method,
    /// For the max-|V2| variant: the largest |V2| among optimal labelings.
    pub max_v2: Option<usize>,
    pub tie_break_note: Option<String>,
}

impl SolveResult {
    pub fn labeling(&self) -> Option<&LabelFunction> {
        match &self.witness {
            Witness::Labeling(f) => Some(f),
            Witness::Set(_) => None,
        }
    }

    pub fn set(&self) -> Option<&VertexSet> {
        match &self.witness {
            Witness::Set(s) => Some(s),
            Witness::Labeling(_) => None,
        }
    }

    /// `{"invariant": str, "value": int, "witness": ..., "method": str}`
    pub fn to_json(&self, g: &Graph) -> Value {
        let witness = match &self.witness {
            Witness::Labeling(f) => serde_json::to_value(f.to_json(g)),
            Witness::Set(s) => serde_json::to_value(s.to_json(g)),
        }
        .expect("witness serializes");
        let mut v = json!({
            "invariant": self.invariant.as_str(),
            "value": self.value,
            "witness": witness,
            "method": self.method.as_str(),
        });
        if let Some(k) = self.max_v2 {
            v["max_v2"] = json!(k);
        }
        if let Some(note) = &self.tie_break_note {
            v["tie_break_note"] = json!(note);
        }
        v
    }
}

pub(crate) const LEX_NOTE: &str = "lexicographically smallest optimal label vector";
pub(crate) const LEX_MAX_V2_NOTE: &str =
    "maximum |V2| among optimal labelings, then lexicographically smallest label vector";
