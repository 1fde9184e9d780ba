//! Index-expectation curvature, Levitt curvature and Gauss–Bonnet checks.

use crate::geodesy::{GeodesyError, WheelEmbedding};
use crate::graph::{euler_characteristic, Graph, GraphError};
use crate::morse::{random_order, Coloring, MorseError, OrderType};
use crate::rational::{int, ratio, Rational};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Largest vertex count for which [`uniform_curvature`] enumerates all orders by default.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurvatureError {
    #[error("measure has empty support")]
    EmptySupport,
    #[error("measure has {weights} weights for {colorings} colorings")]
    LengthMismatch { weights: usize, colorings: usize },
    #[error("weight {index} is negative")]
    NegativeWeight { index: usize },
    #[error("weights sum to {sum}, not 1")]
    WeightSum { sum: String },
    #[error("support coloring {index}: {source}")]
    Support { index: usize, source: MorseError },
    #[error("{n} vertices exceed the exhaustive limit {limit}; use sampling")]
    ExhaustiveBudget { n: usize, limit: usize },
    #[error("curvature vector has {got} entries for {expected} vertices")]
    Partial { expected: usize, got: usize },
    #[error(transparent)]
    Wheel(#[from] GeodesyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Finitely supported probability measure on colorings of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measure {
    support: Vec<Coloring>,
    weights: Vec<Rational>,
    orders: Vec<OrderType>,
}

impl Measure {
    /// Validates weights (nonnegative, summing to one) and local injectivity of the support.
    pub fn new(g: &Graph, support: Vec<Coloring>, weights: Vec<Rational>) -> Result<Self, CurvatureError> {
        if support.is_empty() {
            return Err(CurvatureError::EmptySupport);
        }
        if support.len() != weights.len() {
            return Err(CurvatureError::LengthMismatch { weights: weights.len(), colorings: support.len() });
        }
        if let Some(index) = weights.iter().position(|w| w.is_negative()) {
            return Err(CurvatureError::NegativeWeight { index });
        }
        let sum = crate::rational::sum(&weights);
        if sum != int(1) {
            return Err(CurvatureError::WeightSum { sum: crate::rational::format_rational(&sum) });
        }
        let orders = support
            .iter()
            .enumerate()
            .map(|(index, f)| OrderType::new(g, f).map_err(|source| CurvatureError::Support { index, source }))
            .collect::<Result<_, _>>()?;
        Ok(Measure { support, weights, orders })
    }

    pub fn dirac(g: &Graph, f: Coloring) -> Result<Self, CurvatureError> {
        Self::new(g, vec![f], vec![int(1)])
    }

    pub fn uniform(g: &Graph, support: Vec<Coloring>) -> Result<Self, CurvatureError> {
        let w = ratio(1, support.len().max(1) as i64);
        let weights = vec![w; support.len()];
        Self::new(g, support, weights)
    }

    pub fn support(&self) -> &[Coloring] {
        &self.support
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn orders(&self) -> &[OrderType] {
        &self.orders
    }

    /// `(weight, order type)` pairs.
    pub fn atoms(&self) -> impl Iterator<Item = (&Rational, &OrderType)> {
        self.weights.iter().zip(&self.orders)
    }
}

/// Curvature values, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureVector {
    pub values: Vec<Rational>,
}

impl CurvatureVector {
    pub fn total(&self) -> Rational {
        crate::rational::sum(&self.values)
    }

    pub fn min(&self) -> Option<&Rational> {
        self.values.iter().min()
    }
}

/// `K(v) = sum_j w_j i_{f_j}(v)`
pub fn expectation_curvature(g: &Graph, mu: &Measure) -> CurvatureVector {
    let n = g.vertex_count();
    let atoms: Vec<(&Rational, &OrderType)> = mu.atoms().collect();
    let values = atoms
        .par_iter()
        .map(|(w, f)| {
            let iv = f.index_vector(g);
            iv.indices.iter().map(|&i| *w * int(i)).collect::<Vec<_>>()
        })
        .reduce(
            || vec![Rational::zero(); n],
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(part) {
                    *a += p;
                }
                acc
            },
        );
    CurvatureVector { values }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniformMode {
    /// Average over all `n!` vertex orders; refused above `limit` vertices.
    Exact { limit: usize },
    /// Monte Carlo over `samples` seeded random orders.
    Sampling { samples: usize, seed: u64 },
}

impl Default for UniformMode {
    fn default() -> Self {
        UniformMode::Exact { limit: DEFAULT_EXHAUSTIVE_LIMIT }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum UniformCurvature {
    Exact(CurvatureVector),
    Sampled { estimate: CurvatureVector, std_error: Vec<f64>, samples: usize },
}

impl UniformCurvature {
    pub fn values(&self) -> &CurvatureVector {
        match self {
            UniformCurvature::Exact(k) => k,
            UniformCurvature::Sampled { estimate, .. } => estimate,
        }
    }
}

/// Index sums over every order of `rest` appended to `prefix` (Heap's algorithm).
fn index_sums_over_orders(g: &Graph, prefix: usize, rest: &mut [usize]) -> Vec<i64> {
    let n = g.vertex_count();
    let mut sums = vec![0i64; n];
    let mut order = Vec::with_capacity(n);
    let mut visit = |rest: &[usize]| {
        order.clear();
        order.push(prefix);
        order.extend_from_slice(rest);
        let f = OrderType::from_order(&order);
        for (v, s) in sums.iter_mut().enumerate() {
            *s += f.index_at(g, v);
        }
    };
    let k = rest.len();
    let mut c = vec![0usize; k];
    visit(rest);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                rest.swap(0, i);
            } else {
                rest.swap(c[i], i);
            }
            visit(rest);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    sums
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Expected index under the uniform measure on vertex orders.
pub fn uniform_curvature(g: &Graph, mode: UniformMode) -> Result<UniformCurvature, CurvatureError> {
    let n = g.vertex_count();
    match mode {
        UniformMode::Exact { limit } => {
            if n > limit {
                return Err(CurvatureError::ExhaustiveBudget { n, limit });
            }
            if n == 0 {
                return Ok(UniformCurvature::Exact(CurvatureVector { values: Vec::new() }));
            }
            let sums = (0..n)
                .into_par_iter()
                .map(|first| {
                    let mut rest: Vec<usize> = (0..n).filter(|&v| v != first).collect();
                    index_sums_over_orders(g, first, &mut rest)
                })
                .reduce(|| vec![0i64; n], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
            let total = factorial(n);
            Ok(UniformCurvature::Exact(CurvatureVector { values: sums.iter().map(|&s| ratio(s, total)).collect() }))
        }
        UniformMode::Sampling { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut sums = vec![0i64; n];
            let mut squares = vec![0i64; n];
            for _ in 0..samples {
                let f = OrderType::from_order(&random_order(n, &mut rng));
                for v in 0..n {
                    let i = f.index_at(g, v);
                    sums[v] += i;
                    squares[v] += i * i;
                }
            }
            let count = samples.max(1) as f64;
            let std_error = sums
                .iter()
                .zip(&squares)
                .map(|(&s, &q)| {
                    let mean = s as f64 / count;
                    let var = (q as f64 / count - mean * mean).max(0.0) * count / (count - 1.0).max(1.0);
                    (var / count).sqrt()
                })
                .collect();
            let estimate = CurvatureVector { values: sums.iter().map(|&s| ratio(s, samples.max(1) as i64)).collect() };
            Ok(UniformCurvature::Sampled { estimate, std_error, samples })
        }
    }
}

/// `K(v) = sum_{k>=0} (-1)^k f_{k-1}(S(v)) / (k+1)` with `f_{-1} = 1`.
pub fn levitt_curvature(g: &Graph, v: usize) -> Result<Rational, CurvatureError> {
    g.check_vertex(v)?;
    let fv = g.f_vector_in(g.neighbor_set(v));
    let mut k = int(1);
    for (j, &count) in fv.counts.iter().enumerate() {
        let term = ratio(count as i64, j as i64 + 2);
        if j % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    Ok(k)
}

pub fn levitt_curvature_vector(g: &Graph) -> CurvatureVector {
    CurvatureVector {
        values: (0..g.vertex_count()).map(|v| levitt_curvature(g, v).expect("vertex in range")).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussBonnet {
    pub holds: bool,
    /// `sum K - chi(G)`
    pub residual: Rational,
}

pub fn gauss_bonnet_check(g: &Graph, k: &CurvatureVector) -> Result<GaussBonnet, CurvatureError> {
    if k.values.len() != g.vertex_count() {
        return Err(CurvatureError::Partial { expected: g.vertex_count(), got: k.values.len() });
    }
    let residual = k.total() - int(euler_characteristic(g)?);
    Ok(GaussBonnet { holds: residual.is_zero(), residual })
}

/// Index at the center of the wheel for the order type restricted to the wheel:
/// one minus the Euler characteristic of the part of the boundary cycle below the center.
pub fn wheel_index_of(w: &WheelEmbedding, f: &OrderType) -> i64 {
    let c = w.center();
    let boundary = w.boundary();
    let below: Vec<bool> = boundary.iter().map(|&b| f.below(b, c)).collect();
    let k = below.len();
    let count = below.iter().filter(|&&x| x).count();
    if count == k {
        // whole circle below: chi = 0
        return 1;
    }
    // number of maximal arcs = number of positions where a below-run starts
    let arcs = (0..k).filter(|&i| below[i] && !below[(i + k - 1) % k]).count();
    1 - arcs as i64
}

/// Checks that `f` is locally injective on the wheel before computing its index.
pub fn wheel_index(g: &Graph, w: &WheelEmbedding, f: &Coloring) -> Result<i64, CurvatureError> {
    w.validate(g)?;
    let c = w.center();
    let values = f.values();
    if values.len() != g.vertex_count() {
        let source = MorseError::Partial { expected: g.vertex_count(), got: values.len() };
        return Err(CurvatureError::Support { index: 0, source });
    }
    let boundary = w.boundary();
    let k = boundary.len();
    for i in 0..k {
        let (a, b) = (boundary[i], boundary[(i + 1) % k]);
        for (u, v) in [(c, a), (a, b)] {
            if values[u] == values[v] {
                return Err(CurvatureError::Support { index: 0, source: MorseError::AmbiguousLevel(u.min(v), u.max(v)) });
            }
        }
    }
    Ok(wheel_index_of(w, &OrderType::from_ranks(f.ranks())))
}

/// Expected wheel index at the center, `sum_j w_j wheel_index(W, f_j)`.
pub fn sectional_curvature(g: &Graph, mu: &Measure, w: &WheelEmbedding) -> Result<Rational, CurvatureError> {
    w.validate(g)?;
    Ok(mu.atoms().fold(Rational::zero(), |acc, (weight, f)| acc + weight * int(wheel_index_of(w, f))))
}
