//! Column generation driver: seed a pool, solve, verify, price, repeat.

use super::pricing::price_columns;
use super::{
    solve_maximin_with_budget, verify_certificate, CertificateError, IndexMatrix, LpError, LpSolution, LpStatus,
    PricingConfig, SiteMode, Sites, DEFAULT_PIVOT_BUDGET,
};
use crate::curvature::Measure;
use crate::geodesy::{enumerate_geodesic_wheels, GeodesicMode};
use crate::graph::{euler_characteristic, Graph};
use crate::json::measure_to_value;
use crate::morse::{random_order, OrderType};
use crate::rational::{format_rational, int, Rational};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::HashSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SiteMode,
    pub seed: u64,
    /// Pricing rounds after the initial solve.
    pub rounds: usize,
    /// Random colorings in the initial pool, on top of the two canonical ones.
    pub initial_pool: usize,
    pub restarts: usize,
    /// Site evaluations per pricing restart.
    pub evaluations: u64,
    pub pivot_budget: u64,
    /// Geodesic wheels kept per center in sectional mode.
    pub wheel_cap: usize,
    pub geodesic: GeodesicMode,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: SiteMode::Euler,
            seed: 0,
            rounds: 50,
            initial_pool: 16,
            restarts: 8,
            evaluations: 200_000,
            pivot_budget: DEFAULT_PIVOT_BUDGET,
            wheel_cap: 4,
            geodesic: GeodesicMode::Existential,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    /// Certified: the reported measure has positive curvature at every site.
    Positive,
    /// Pricing found no improving column and the pool optimum is not positive.
    NonpositiveWithinPool,
    /// Rounds or pivots ran out before pricing converged.
    Budget,
}

impl SearchStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            SearchStatus::Positive => 0,
            SearchStatus::NonpositiveWithinPool => 2,
            SearchStatus::Budget => 3,
        }
    }

    fn statement(self) -> &'static str {
        match self {
            SearchStatus::Positive => "the measure below has positive curvature at every site; verified exactly",
            SearchStatus::NonpositiveWithinPool => {
                "no measure supported on the explored pool has positive curvature at every site; \
                 this says nothing about colorings outside the pool"
            }
            SearchStatus::Budget => {
                "budget exhausted before pricing converged; t_star is the best certified value on the pool so far"
            }
        }
    }
}

/// Exact pool-level certificate: the full matrix, primal weights and dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub matrix: IndexMatrix,
    #[serde(with = "crate::rational::serde_rational")]
    pub t_star: Rational,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub weights: Vec<Rational>,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub dual: Vec<Rational>,
}

impl Certificate {
    fn new(matrix: IndexMatrix, sol: &LpSolution) -> Self {
        Certificate { matrix, t_star: sol.t_star.clone(), weights: sol.weights.clone(), dual: sol.dual.clone() }
    }

    /// Re-runs the exact checks, e.g. on a report read back from disk.
    pub fn verify(&self) -> Result<(), CertificateError> {
        let status = if self.t_star.is_positive() { LpStatus::Positive } else { LpStatus::NonpositiveOpt };
        let sol = LpSolution {
            status,
            t_star: self.t_star.clone(),
            weights: self.weights.clone(),
            dual: self.dual.clone(),
            pivots: 0,
        };
        verify_certificate(&self.matrix, &sol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub mode: SiteMode,
    pub status: SearchStatus,
    pub statement: String,
    #[serde(with = "crate::rational::serde_rational")]
    pub t_star: Rational,
    /// Euler mode bound `chi / |V|` on `t_star`.
    #[serde(with = "crate::rational::serde_rational")]
    pub ceiling: Rational,
    pub chi: i64,
    /// `t_star` equals the ceiling, so no measure on any pool does better.
    pub ceiling_reached: bool,
    pub measure: Value,
    /// Site descriptions, row order of the certificate matrix.
    pub sites: Vec<Value>,
    pub certificate: Certificate,
    pub pool_size: usize,
    pub rounds_used: usize,
    pub pivots: u64,
    pub seed: u64,
}

fn pricing_seed(root: u64, round: usize) -> u64 {
    root.wrapping_add((round as u64 + 1).wrapping_mul(0xD1B5_4A32_D192_ED03))
}

struct Pool {
    orders: Vec<OrderType>,
    columns: Vec<Vec<i64>>,
    seen: HashSet<Vec<i64>>,
}

impl Pool {
    /// Columns are deduplicated by index vector, not by coloring.
    fn add(&mut self, f: OrderType, column: Vec<i64>) -> bool {
        if !self.seen.insert(column.clone()) {
            return false;
        }
        self.orders.push(f);
        self.columns.push(column);
        true
    }
}

fn build_sites(g: &Graph, config: &SearchConfig) -> Result<Sites, LpError> {
    match config.mode {
        SiteMode::Euler => Ok(Sites::Vertices(g.vertex_count())),
        SiteMode::Sectional => {
            let per_vertex = (0..g.vertex_count())
                .into_par_iter()
                .map(|x| enumerate_geodesic_wheels(g, x, config.wheel_cap, config.geodesic).map(|e| e.wheels))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| LpError::Setup(e.to_string()))?;
            let wheels: Vec<_> = per_vertex.into_iter().flatten().collect();
            Sites::new(g, SiteMode::Sectional, Some(&wheels))
        }
    }
}

fn describe_sites(g: &Graph, sites: &Sites) -> Vec<Value> {
    match sites {
        Sites::Vertices(n) => (0..*n).map(|v| json!(g.label(v))).collect(),
        Sites::Wheels(ws) => ws
            .iter()
            .map(|w| {
                json!({
                    "center": g.label(w.center()),
                    "boundary": w.boundary().iter().map(|&b| g.label(b)).collect::<Vec<_>>(),
                })
            })
            .collect(),
    }
}

/// Checks the Gauss–Bonnet ceiling on a solve. In Euler mode `t_star` is the
/// minimum of a curvature summing to chi; in sectional mode the Euler
/// curvature of the optimal measure is checked instead.
fn check_ceiling(
    g: &Graph,
    mode: SiteMode,
    pool: &Pool,
    sol: &LpSolution,
    chi: i64,
    ceiling: &Rational,
) -> Result<(), LpError> {
    let violated = |value: &Rational| LpError::CeilingViolated {
        t_star: format_rational(value),
        ceiling: format_rational(ceiling),
    };
    match mode {
        SiteMode::Euler => {
            if sol.t_star > *ceiling {
                return Err(violated(&sol.t_star));
            }
        }
        SiteMode::Sectional => {
            let n = g.vertex_count();
            let mut k = vec![Rational::zero(); n];
            for (w, f) in sol.weights.iter().zip(&pool.orders) {
                if w.is_zero() {
                    continue;
                }
                for (kv, i) in k.iter_mut().zip(f.index_vector(g).indices) {
                    *kv += w * int(i);
                }
            }
            let total: Rational = k.iter().sum();
            let min = k.iter().min().cloned().unwrap_or_else(Rational::zero);
            if total != int(chi) || min > *ceiling {
                return Err(violated(&min));
            }
        }
    }
    Ok(())
}

/// Searches for a probability measure on colorings with positive curvature at
/// every site. Every solve is verified exactly before it is used.
pub fn positive_curvature_search(g: &Graph, config: &SearchConfig) -> Result<SearchReport, LpError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(LpError::NoSites);
    }
    let chi = euler_characteristic(g).map_err(|e| LpError::Setup(e.to_string()))?;
    let ceiling = Rational::new(chi.into(), (n as i64).into());
    let sites = build_sites(g, config)?;

    let mut pool = Pool { orders: Vec::new(), columns: Vec::new(), seen: HashSet::new() };
    let identity = OrderType::from_order(&(0..n).collect::<Vec<_>>());
    let mut seeds = vec![identity.reversed(), identity];
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    seeds.extend((0..config.initial_pool).map(|_| OrderType::from_order(&random_order(n, &mut rng))));
    let columns: Vec<Vec<i64>> = seeds.par_iter().map(|f| sites.column(g, f)).collect();
    for (f, c) in seeds.into_iter().zip(columns) {
        pool.add(f, c);
    }

    let mut best: Option<(LpSolution, IndexMatrix)> = None;
    let mut pivots = 0u64;
    let mut converged = false;
    let mut rounds_used = 0;
    for round in 0..=config.rounds {
        let matrix = IndexMatrix::from_columns(sites.len(), pool.columns.clone())?;
        let sol = match solve_maximin_with_budget(&matrix, config.pivot_budget) {
            Ok(sol) => sol,
            Err(LpError::PivotBudget(_)) if best.is_some() => break,
            Err(e) => return Err(e),
        };
        pivots += sol.pivots;
        verify_certificate(&matrix, &sol)?;
        check_ceiling(g, config.mode, &pool, &sol, chi, &ceiling)?;
        if let Some((prev, _)) = &best {
            if sol.t_star < prev.t_star {
                return Err(LpError::NotMonotone {
                    before: format_rational(&prev.t_star),
                    after: format_rational(&sol.t_star),
                });
            }
        }
        rounds_used = round;
        let pricing = PricingConfig {
            seed: pricing_seed(config.seed, round),
            restarts: config.restarts,
            evaluations: config.evaluations,
        };
        let at_ceiling = config.mode == SiteMode::Euler && sol.t_star == ceiling;
        let last = round == config.rounds;
        let dual = sol.dual.clone();
        let t_star = sol.t_star.clone();
        best = Some((sol, matrix));
        if at_ceiling {
            converged = true;
            break;
        }
        if last {
            break;
        }
        let mut added = false;
        for (f, column) in price_columns(g, &sites, &dual, &t_star, &pricing) {
            added |= pool.add(f, column);
        }
        if !added {
            converged = true;
            break;
        }
    }

    let (sol, matrix) = best.ok_or(LpError::PivotBudget(config.pivot_budget))?;
    let status = if sol.t_star.is_positive() {
        SearchStatus::Positive
    } else if converged {
        SearchStatus::NonpositiveWithinPool
    } else {
        SearchStatus::Budget
    };
    let (support, weights): (Vec<_>, Vec<_>) = sol
        .weights
        .iter()
        .zip(&pool.orders)
        .filter(|(w, _)| !w.is_zero())
        .map(|(w, f)| (f.to_coloring(), w.clone()))
        .unzip();
    let measure = Measure::new(g, support, weights).map_err(|e| LpError::Setup(e.to_string()))?;
    Ok(SearchReport {
        schema_version: SCHEMA_VERSION,
        mode: config.mode,
        status,
        statement: status.statement().to_string(),
        t_star: sol.t_star.clone(),
        ceiling_reached: config.mode == SiteMode::Euler && sol.t_star == ceiling,
        ceiling,
        chi,
        measure: measure_to_value(g, &measure),
        sites: describe_sites(g, &sites),
        certificate: Certificate::new(matrix, &sol),
        pool_size: pool.columns.len(),
        rounds_used,
        pivots,
        seed: config.seed,
    })
}

impl SearchReport {
    /// Curvature values of the reported measure, one per site.
    pub fn site_values(&self) -> Vec<Rational> {
        let m = &self.certificate.matrix;
        (0..m.rows())
            .map(|i| self.certificate.weights.iter().enumerate().map(|(j, w)| w * int(m.get(i, j))).sum())
            .collect()
    }
}
