//! Colorings (locally injective vertex functions), Poincaré–Hopf indices,
//! symmetric indices and divisors of discrete vector fields.

use crate::graph::{cliques, Graph, GraphError, Simplex};
use crate::rational::{int, Rational};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorseError {
    #[error("coloring has {got} values for {expected} vertices")]
    Partial { expected: usize, got: usize },
    #[error("ambiguous level: adjacent vertices {0} and {1} share a value")]
    AmbiguousLevel(usize, usize),
    #[error("field assigns simplex {simplex} to vertex {vertex} outside it")]
    ChoiceOutsideSimplex { simplex: String, vertex: usize },
    #[error("field leaves simplex {0} unassigned")]
    Unassigned(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Vertex function `f`, indexed by dense vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    values: Vec<Rational>,
}

impl Coloring {
    pub fn new(values: Vec<Rational>) -> Self {
        Coloring { values }
    }

    pub fn from_integers(values: impl IntoIterator<Item = i64>) -> Self {
        Coloring { values: values.into_iter().map(int).collect() }
    }

    /// Coloring whose value at vertex `order[k]` is `k`.
    pub fn from_order(order: &[usize]) -> Self {
        let mut values = vec![0i64; order.len()];
        for (k, &v) in order.iter().enumerate() {
            values[v] = k as i64;
        }
        Self::from_integers(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn negated(&self) -> Self {
        Coloring { values: self.values.iter().map(|v| -v).collect() }
    }

    /// Dense ranks of the values; equal values share a rank.
    pub fn ranks(&self) -> Vec<u32> {
        let mut sorted: Vec<&Rational> = self.values.iter().collect();
        sorted.sort();
        sorted.dedup();
        self.values
            .iter()
            .map(|v| sorted.binary_search(&v).expect("value present") as u32)
            .collect()
    }

    pub fn restricted(&self, vertices: &[usize]) -> Coloring {
        Coloring { values: vertices.iter().map(|&v| self.values[v].clone()).collect() }
    }
}

/// Poincaré–Hopf indices, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexVector {
    pub indices: Vec<i64>,
}

impl IndexVector {
    pub fn sum(&self) -> i64 {
        self.indices.iter().sum()
    }
}

fn check_total(g: &Graph, f: &Coloring) -> Result<(), MorseError> {
    if f.len() != g.vertex_count() {
        return Err(MorseError::Partial { expected: g.vertex_count(), got: f.len() });
    }
    Ok(())
}

fn first_conflict(g: &Graph, f: &Coloring) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| f.values[u] == f.values[v])
}

pub fn is_locally_injective(g: &Graph, f: &Coloring) -> Result<bool, MorseError> {
    check_total(g, f)?;
    Ok(first_conflict(g, f).is_none())
}

/// Validated order type of a coloring: the representation every index
/// computation runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderType {
    ranks: Vec<u32>,
}

impl OrderType {
    pub fn new(g: &Graph, f: &Coloring) -> Result<Self, MorseError> {
        check_total(g, f)?;
        if let Some((u, v)) = first_conflict(g, f) {
            return Err(MorseError::AmbiguousLevel(u, v));
        }
        Ok(OrderType { ranks: f.ranks() })
    }

    /// From a linear order of the vertices, lowest first.
    pub fn from_order(order: &[usize]) -> Self {
        let mut ranks = vec![0u32; order.len()];
        for (k, &v) in order.iter().enumerate() {
            ranks[v] = k as u32;
        }
        OrderType { ranks }
    }

    pub fn from_ranks(ranks: Vec<u32>) -> Self {
        OrderType { ranks }
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn reversed(&self) -> Self {
        let top = self.ranks.iter().copied().max().unwrap_or(0);
        OrderType { ranks: self.ranks.iter().map(|r| top - r).collect() }
    }

    pub(crate) fn swap(&mut self, u: usize, v: usize) {
        self.ranks.swap(u, v);
    }

    pub fn below(&self, u: usize, v: usize) -> bool {
        self.ranks[u] < self.ranks[v]
    }

    /// `i_f(v) = 1 - chi(S^-(v))` where `S^-(v)` is the part of the unit sphere below `v`.
    pub fn index_at(&self, g: &Graph, v: usize) -> i64 {
        let mut lower = g.neighbor_set(v).clone();
        for &w in g.neighbors(v) {
            if !self.below(w, v) {
                lower.set(w, false);
            }
        }
        1 - g.euler_in(&lower)
    }

    pub fn index_vector(&self, g: &Graph) -> IndexVector {
        let indices = if g.vertex_count() >= 64 {
            (0..g.vertex_count()).into_par_iter().map(|v| self.index_at(g, v)).collect()
        } else {
            (0..g.vertex_count()).map(|v| self.index_at(g, v)).collect()
        };
        IndexVector { indices }
    }

    pub fn to_coloring(&self) -> Coloring {
        Coloring::from_integers(self.ranks.iter().map(|&r| r as i64))
    }
}

pub fn ph_index(g: &Graph, f: &Coloring, v: usize) -> Result<i64, MorseError> {
    g.check_vertex(v)?;
    Ok(OrderType::new(g, f)?.index_at(g, v))
}

pub fn index_vector(g: &Graph, f: &Coloring) -> Result<IndexVector, MorseError> {
    Ok(OrderType::new(g, f)?.index_vector(g))
}

/// `j_f(v) = (i_f(v) + i_{-f}(v)) / 2`
pub fn symmetric_index(g: &Graph, f: &Coloring, v: usize) -> Result<Rational, MorseError> {
    let up = ph_index(g, f, v)?;
    let down = ph_index(g, &f.negated(), v)?;
    Ok(crate::rational::ratio(up + down, 2))
}

/// Discrete vector field: every simplex is assigned one of its own vertices.
#[derive(Debug, Clone, Default)]
pub struct FieldAssignment {
    choice: HashMap<Simplex, usize>,
}

impl FieldAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, simplex: Simplex, vertex: usize) {
        self.choice.insert(simplex, vertex);
    }

    /// Every simplex of `g` assigned by `pick`.
    pub fn from_fn(g: &Graph, mut pick: impl FnMut(&Simplex) -> usize) -> Self {
        let choice = cliques(g, None).into_iter().map(|s| {
            let v = pick(&s);
            (s, v)
        });
        FieldAssignment { choice: choice.collect() }
    }

    /// Each simplex goes to its vertex with the largest value of `f`.
    pub fn towards_maximum(g: &Graph, f: &OrderType) -> Self {
        Self::from_fn(g, |s| *s.vertices().iter().max_by_key(|&&v| f.ranks()[v]).expect("nonempty simplex"))
    }

    pub fn get(&self, s: &Simplex) -> Option<usize> {
        self.choice.get(s).copied()
    }
}

/// Poincaré–Hopf divisor: `index(v) = sum of (-1)^dim(x)` over simplices `x` assigned to `v`.
pub fn divisor_from_field(g: &Graph, field: &FieldAssignment) -> Result<IndexVector, MorseError> {
    let mut indices = vec![0i64; g.vertex_count()];
    for s in cliques(g, None) {
        let v = field.get(&s).ok_or_else(|| MorseError::Unassigned(s.to_string()))?;
        if !s.contains(v) {
            return Err(MorseError::ChoiceOutsideSimplex { simplex: s.to_string(), vertex: v });
        }
        indices[v] += s.energy();
    }
    Ok(IndexVector { indices })
}

/// Uniformly random permutation of `0..n` as values, reproducible per seed.
pub fn random_coloring(g: &Graph, seed: u64) -> Coloring {
    Coloring::from_order(&random_order(g.vertex_count(), &mut ChaCha8Rng::seed_from_u64(seed)))
}

pub fn random_order<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}
