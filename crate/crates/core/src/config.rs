//! Run configuration: seed, worker count and budgets.
//!
//! Budget defaults can be overridden through `GRAPHCURV_*` environment
//! variables; command-line flags override both.

use crate::curvature::DEFAULT_EXHAUSTIVE_LIMIT;
use crate::geodesy::DEFAULT_MAX_WHEELS;
use crate::lp::{SearchConfig, DEFAULT_PIVOT_BUDGET};
use crate::topology::DEFAULT_NODE_BUDGET;
use serde::Serialize;
use std::path::PathBuf;

pub const ENV_NODE_BUDGET: &str = "GRAPHCURV_NODE_BUDGET";
pub const ENV_PIVOT_BUDGET: &str = "GRAPHCURV_PIVOT_BUDGET";
pub const ENV_RESTARTS: &str = "GRAPHCURV_RESTARTS";
pub const ENV_EVALUATIONS: &str = "GRAPHCURV_EVALUATIONS";
pub const ENV_WHEEL_CAP: &str = "GRAPHCURV_WHEEL_CAP";
pub const ENV_MAX_WHEELS: &str = "GRAPHCURV_MAX_WHEELS";
pub const ENV_EXHAUSTIVE_LIMIT: &str = "GRAPHCURV_EXHAUSTIVE_LIMIT";

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{var}={value:?} is not a nonnegative integer")]
pub struct ConfigError {
    pub var: &'static str,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Recursion nodes for topology recognition.
    pub node_budget: u64,
    /// Simplex pivots per solve.
    pub pivot_budget: u64,
    /// Parallel pricing restarts per round.
    pub restarts: usize,
    /// Site evaluations per pricing restart.
    pub evaluations: u64,
    /// Geodesic wheels per center in sectional search.
    pub wheel_cap: usize,
    /// Wheels listed by the wheel enumerator.
    pub max_wheels: usize,
    /// Largest vertex count for the exact uniform average over all orders.
    pub exhaustive_limit: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        let search = SearchConfig::default();
        Budgets {
            node_budget: DEFAULT_NODE_BUDGET,
            pivot_budget: DEFAULT_PIVOT_BUDGET,
            restarts: search.restarts,
            evaluations: search.evaluations,
            wheel_cap: search.wheel_cap,
            max_wheels: DEFAULT_MAX_WHEELS,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
        }
    }
}

impl Budgets {
    pub fn from_env() -> Result<Self, ConfigError> {
        Self::from_lookup(|var| std::env::var(var).ok())
    }

    pub fn from_lookup(lookup: impl Fn(&str) -> Option<String>) -> Result<Self, ConfigError> {
        let read = |var: &'static str, default: u64| -> Result<u64, ConfigError> {
            match lookup(var) {
                None => Ok(default),
                Some(value) => value.trim().parse().map_err(|_| ConfigError { var, value }),
            }
        };
        let d = Budgets::default();
        Ok(Budgets {
            node_budget: read(ENV_NODE_BUDGET, d.node_budget)?,
            pivot_budget: read(ENV_PIVOT_BUDGET, d.pivot_budget)?,
            restarts: read(ENV_RESTARTS, d.restarts as u64)? as usize,
            evaluations: read(ENV_EVALUATIONS, d.evaluations)?,
            wheel_cap: read(ENV_WHEEL_CAP, d.wheel_cap as u64)? as usize,
            max_wheels: read(ENV_MAX_WHEELS, d.max_wheels as u64)? as usize,
            exhaustive_limit: read(ENV_EXHAUSTIVE_LIMIT, d.exhaustive_limit as u64)? as usize,
        })
    }
}

/// Everything a run depends on. Two runs with equal configs print the same
/// bytes; the worker count is deliberately not part of the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub threads: Option<usize>,
    pub budgets: Budgets,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn environment_overrides_defaults() {
        let env: HashMap<&str, &str> = [(ENV_PIVOT_BUDGET, "12"), (ENV_WHEEL_CAP, " 3 ")].into();
        let b = Budgets::from_lookup(|k| env.get(k).map(|v| v.to_string())).unwrap();
        assert_eq!(b.pivot_budget, 12);
        assert_eq!(b.wheel_cap, 3);
        assert_eq!(b.node_budget, DEFAULT_NODE_BUDGET);
    }

    #[test]
    fn garbage_is_rejected() {
        let err = Budgets::from_lookup(|k| (k == ENV_RESTARTS).then(|| "many".to_string())).unwrap_err();
        assert_eq!(err.var, ENV_RESTARTS);
    }
}
