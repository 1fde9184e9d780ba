//! Positive-curvature measures as an exact maximin linear program.
//!
//! Rows of the [`IndexMatrix`] are constraint sites (vertices, or geodesic
//! wheels at their centers), columns are pool colorings, entries are integer
//! indices. A probability vector `w` on the columns yields the curvature
//! `A w`; [`solve_maximin`] finds the `w` maximizing the smallest site value
//! `t_star`, together with a dual distribution on the sites proving optimality.

mod certificate;
mod pricing;
mod search;
mod simplex;

pub use certificate::{verify_certificate, CertificateError};
pub use pricing::{price_columns, price_new_column, PricingConfig};
pub use search::{positive_curvature_search, SearchConfig, SearchReport, SearchStatus};
pub use simplex::{solve_maximin, solve_maximin_with_budget, DEFAULT_PIVOT_BUDGET};

use crate::geodesy::WheelEmbedding;
use crate::graph::Graph;
use crate::morse::{Coloring, MorseError, OrderType};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("empty coloring pool")]
    EmptyPool,
    #[error("sectional mode needs a nonempty wheel list")]
    NoWheels,
    #[error("matrix has no sites")]
    NoSites,
    #[error("column {0} has the wrong number of entries")]
    Ragged(usize),
    #[error("pivot budget of {0} exhausted")]
    PivotBudget(u64),
    #[error("linear program unbounded")]
    Unbounded,
    #[error("pool coloring {index}: {source}")]
    Pool { index: usize, source: MorseError },
    #[error("solver produced a rejected certificate: {0}")]
    CertificateRejected(#[from] CertificateError),
    #[error("Gauss-Bonnet ceiling violated: t_star {t_star} > chi/|V| = {ceiling}")]
    CeilingViolated { t_star: String, ceiling: String },
    #[error("t_star decreased from {before} to {after} after enlarging the pool")]
    NotMonotone { before: String, after: String },
    #[error("{0}")]
    Setup(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SiteMode {
    /// One site per vertex, entries are Poincaré–Hopf indices.
    #[default]
    Euler,
    /// One site per geodesic wheel, entries are wheel indices at the center.
    Sectional,
}

/// Constraint sites of the program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sites {
    Vertices(usize),
    Wheels(Vec<WheelEmbedding>),
}

impl Sites {
    pub fn new(g: &Graph, mode: SiteMode, wheels: Option<&[WheelEmbedding]>) -> Result<Self, LpError> {
        match mode {
            SiteMode::Euler => Ok(Sites::Vertices(g.vertex_count())),
            SiteMode::Sectional => match wheels {
                Some(ws) if !ws.is_empty() => Ok(Sites::Wheels(ws.to_vec())),
                _ => Err(LpError::NoWheels),
            },
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Sites::Vertices(n) => *n,
            Sites::Wheels(ws) => ws.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, g: &Graph, s: usize, f: &OrderType) -> i64 {
        match self {
            Sites::Vertices(_) => f.index_at(g, s),
            Sites::Wheels(ws) => crate::curvature::wheel_index_of(&ws[s], f),
        }
    }

    pub fn column(&self, g: &Graph, f: &OrderType) -> Vec<i64> {
        match self {
            Sites::Vertices(_) => f.index_vector(g).indices,
            Sites::Wheels(_) => (0..self.len()).map(|s| self.value(g, s, f)).collect(),
        }
    }

    /// Sites whose value can change when the relative order of the adjacent
    /// vertices `u` and `v` flips.
    pub(crate) fn affected_by(&self, by_center: &[Vec<usize>], u: usize, v: usize) -> Vec<usize> {
        match self {
            Sites::Vertices(_) => vec![u, v],
            Sites::Wheels(ws) => {
                let mut out = Vec::new();
                for (c, other) in [(u, v), (v, u)] {
                    out.extend(by_center[c].iter().copied().filter(|&s| ws[s].boundary().contains(&other)));
                }
                out
            }
        }
    }

    /// Wheel sites grouped by center; empty lists in Euler mode.
    pub(crate) fn by_center(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        if let Sites::Wheels(ws) = self {
            for (s, w) in ws.iter().enumerate() {
                out[w.center()].push(s);
            }
        }
        out
    }

    /// Vertex each site is attached to.
    pub fn anchor(&self, s: usize) -> usize {
        match self {
            Sites::Vertices(_) => s,
            Sites::Wheels(ws) => ws[s].center(),
        }
    }
}

/// Integer index matrix, stored column by column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexMatrix {
    rows: usize,
    columns: Vec<Vec<i64>>,
}

impl IndexMatrix {
    pub fn from_columns(rows: usize, columns: Vec<Vec<i64>>) -> Result<Self, LpError> {
        if rows == 0 {
            return Err(LpError::NoSites);
        }
        if columns.is_empty() {
            return Err(LpError::EmptyPool);
        }
        if let Some(j) = columns.iter().position(|c| c.len() != rows) {
            return Err(LpError::Ragged(j));
        }
        Ok(IndexMatrix { rows, columns })
    }

    /// Row-major input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, LpError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(LpError::Ragged(i));
        }
        let columns = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Self::from_columns(m, columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, site: usize, col: usize) -> i64 {
        self.columns[col][site]
    }

    pub fn column(&self, col: usize) -> &[i64] {
        &self.columns[col]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn push_column(&mut self, column: Vec<i64>) -> Result<(), LpError> {
        if column.len() != self.rows {
            return Err(LpError::Ragged(self.columns.len()));
        }
        self.columns.push(column);
        Ok(())
    }
}

/// Outcome class of a maximin solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LpStatus {
    /// `t_star > 0`: the weights define a measure with positive curvature at every site.
    Positive,
    /// Optimal and `t_star <= 0`.
    NonpositiveOpt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub t_star: Rational,
    /// Probability vector over columns.
    pub weights: Vec<Rational>,
    /// Probability vector over sites with `max_j (dual^T A)_j = t_star`.
    pub dual: Vec<Rational>,
    pub pivots: u64,
}

/// Index matrix for a coloring pool.
pub fn build_index_matrix(
    g: &Graph,
    pool: &[Coloring],
    mode: SiteMode,
    wheels: Option<&[WheelEmbedding]>,
) -> Result<IndexMatrix, LpError> {
    if pool.is_empty() {
        return Err(LpError::EmptyPool);
    }
    let sites = Sites::new(g, mode, wheels)?;
    if let Sites::Wheels(ws) = &sites {
        for w in ws {
            w.validate(g).map_err(|e| LpError::Setup(e.to_string()))?;
        }
    }
    let columns = pool
        .iter()
        .enumerate()
        .map(|(index, f)| {
            let order = OrderType::new(g, f).map_err(|source| LpError::Pool { index, source })?;
            Ok(sites.column(g, &order))
        })
        .collect::<Result<Vec<_>, LpError>>()?;
    IndexMatrix::from_columns(sites.len(), columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cross_polytope, cycle, icosahedron};
    use crate::geodesy::{enumerate_geodesic_wheels, GeodesicMode};
    use std::collections::HashSet;

    fn all_orders(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for rest in all_orders(n - 1) {
            for pos in 0..=rest.len() {
                let mut o = rest.clone();
                o.insert(pos, n - 1);
                out.push(o);
            }
        }
        out
    }

    #[test]
    fn octahedron_columns_sum_to_chi() {
        let oct = cross_polytope(3).unwrap();
        let pool: Vec<Coloring> = all_orders(6).iter().map(|o| Coloring::from_order(o)).collect();
        assert_eq!(pool.len(), 720);
        let m = build_index_matrix(&oct, &pool, SiteMode::Euler, None).unwrap();
        let distinct: HashSet<&Vec<i64>> = m.columns().iter().collect();
        assert!(distinct.iter().all(|c| c.iter().sum::<i64>() == 2));
        assert!(distinct.len() < 720);
    }

    #[test]
    fn single_column_is_the_index_vector() {
        let c4 = cycle(4).unwrap();
        let m = build_index_matrix(&c4, &[Coloring::from_integers([0, 1, 2, 3])], SiteMode::Euler, None).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 1));
        assert_eq!(m.column(0), &[1, 0, 0, -1]);
    }

    #[test]
    fn sectional_rows_on_a_two_graph() {
        let g = icosahedron();
        let wheels: Vec<_> = (0..12)
            .flat_map(|x| enumerate_geodesic_wheels(&g, x, 10, GeodesicMode::Existential).unwrap().wheels)
            .collect();
        let pool = vec![crate::morse::random_coloring(&g, 1)];
        let m = build_index_matrix(&g, &pool, SiteMode::Sectional, Some(&wheels)).unwrap();
        assert_eq!(m.rows(), 12);
        // wheels are the full links, so wheel indices equal vertex indices
        let e = build_index_matrix(&g, &pool, SiteMode::Euler, None).unwrap();
        assert_eq!(m.column(0), e.column(0));
    }

    #[test]
    fn construction_errors() {
        let c4 = cycle(4).unwrap();
        assert_eq!(build_index_matrix(&c4, &[], SiteMode::Euler, None), Err(LpError::EmptyPool));
        let pool = [Coloring::from_integers([0, 1, 2, 3])];
        assert_eq!(build_index_matrix(&c4, &pool, SiteMode::Sectional, None), Err(LpError::NoWheels));
        assert_eq!(build_index_matrix(&c4, &pool, SiteMode::Sectional, Some(&[])), Err(LpError::NoWheels));
        assert!(matches!(
            build_index_matrix(&c4, &[Coloring::from_integers([0, 0, 1, 2])], SiteMode::Euler, None),
            Err(LpError::Pool { index: 0, .. })
        ));
        assert_eq!(IndexMatrix::from_rows(&[vec![1, 2], vec![3]]), Err(LpError::Ragged(1)));
    }
}
