//! Recognition of contractible graphs, d-spheres and d-graphs.
//!
//! All three predicates are defined recursively:
//!
//! * a graph is contractible if it is a single vertex, or some vertex `v` has a
//!   contractible unit sphere and `G - v` is contractible;
//! * the empty graph is the `(-1)`-sphere; for `d >= 0` a `d`-sphere is a graph
//!   whose unit spheres are all `(d-1)`-spheres and which becomes contractible
//!   after removing a vertex (connectedness is required from `d = 1` on, since
//!   the 0-sphere is two points);
//! * a `d`-graph is a nonempty connected graph whose unit spheres are all
//!   `(d-1)`-spheres.
//!
//! Every graph met during the recursion is an induced subgraph of the graph the
//! [`Recognizer`] was created for, so intermediate graphs are [`VertexSet`]s of
//! the root and memoized by that set.

use crate::graph::{Graph, VertexSet};
use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("undecided-budget: recursion exceeded {budget} nodes")]
    UndecidedBudget { budget: u64 },
    #[error("dimension {0} out of range")]
    BadDimension(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Query {
    Contractible,
    Sphere(i64),
}

/// How a d-sphere candidate is punctured before testing contractibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PunctureMode {
    /// Remove only the smallest vertex.
    #[default]
    Smallest,
    /// Require `G - v` contractible for every vertex `v`.
    Exhaustive,
}

/// Memoizing evaluator of the recursive predicates on one root graph.
pub struct Recognizer<'g> {
    graph: &'g Graph,
    memo: Option<DashMap<(VertexSet, Query), bool>>,
    budget: u64,
    nodes: AtomicU64,
    puncture: PunctureMode,
}

impl<'g> Recognizer<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Recognizer {
            graph,
            memo: Some(DashMap::new()),
            budget: DEFAULT_NODE_BUDGET,
            nodes: AtomicU64::new(0),
            puncture: PunctureMode::Smallest,
        }
    }

    /// Plain recursion without a memo table.
    pub fn without_memo(graph: &'g Graph) -> Self {
        Recognizer { memo: None, ..Self::new(graph) }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_puncture(mut self, mode: PunctureMode) -> Self {
        self.puncture = mode;
        self
    }

    /// Recursion nodes visited so far (memo hits excluded).
    pub fn nodes_visited(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    fn tick(&self) -> Result<(), TopologyError> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            Err(TopologyError::UndecidedBudget { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn cached(&self, set: &VertexSet, q: Query, compute: impl FnOnce() -> Result<bool, TopologyError>) -> Result<bool, TopologyError> {
        if let Some(memo) = &self.memo {
            if let Some(hit) = memo.get(&(set.clone(), q)) {
                return Ok(*hit);
            }
        }
        self.tick()?;
        let value = compute()?;
        if let Some(memo) = &self.memo {
            memo.insert((set.clone(), q), value);
        }
        Ok(value)
    }

    fn without(set: &VertexSet, v: usize) -> VertexSet {
        let mut rest = set.clone();
        rest.set(v, false);
        rest
    }

    /// Whether `v` can be removed from `set`: its sphere within `set` is contractible.
    fn removable(&self, set: &VertexSet, v: usize) -> Result<bool, TopologyError> {
        self.contractible(&self.graph.sphere_in(v, set))
    }

    pub fn contractible(&self, set: &VertexSet) -> Result<bool, TopologyError> {
        match set.count_ones(..) {
            0 => return Ok(false),
            1 => return Ok(true),
            _ => {}
        }
        self.cached(set, Query::Contractible, || {
            // Removing a vertex with contractible sphere preserves both chi and connectedness.
            if self.graph.euler_in(set) != 1 || !self.graph.is_connected_in(set) {
                return Ok(false);
            }
            for v in set.ones() {
                if self.removable(set, v)? && self.contractible(&Self::without(set, v))? {
                    return Ok(true);
                }
            }
            Ok(false)
        })
    }

    /// Vertex removal sequence reducing `set` to its last vertex, which ends the list.
    pub fn collapse_order(&self, set: &VertexSet) -> Result<Option<Vec<usize>>, TopologyError> {
        if !self.contractible(set)? {
            return Ok(None);
        }
        let mut order = Vec::with_capacity(set.count_ones(..));
        let mut current = set.clone();
        while current.count_ones(..) > 1 {
            let mut next = None;
            for v in current.ones() {
                let rest = Self::without(&current, v);
                if self.removable(&current, v)? && self.contractible(&rest)? {
                    next = Some((v, rest));
                    break;
                }
            }
            let (v, rest) = next.expect("contractible set has a removable vertex with contractible rest");
            order.push(v);
            current = rest;
        }
        order.extend(current.ones());
        Ok(Some(order))
    }

    pub fn sphere(&self, set: &VertexSet, d: i64) -> Result<bool, TopologyError> {
        if d < -1 {
            return Err(TopologyError::BadDimension(d));
        }
        if d == -1 {
            return Ok(set.is_clear());
        }
        if set.is_clear() {
            return Ok(false);
        }
        self.cached(set, Query::Sphere(d), || {
            let expected_chi = if d % 2 == 0 { 2 } else { 0 };
            if self.graph.euler_in(set) != expected_chi {
                return Ok(false);
            }
            if d >= 1 && !self.graph.is_connected_in(set) {
                return Ok(false);
            }
            for v in set.ones() {
                if !self.sphere(&self.graph.sphere_in(v, set), d - 1)? {
                    return Ok(false);
                }
            }
            match self.puncture {
                PunctureMode::Smallest => {
                    let v = set.ones().next().expect("nonempty");
                    self.contractible(&Self::without(set, v))
                }
                PunctureMode::Exhaustive => {
                    for v in set.ones() {
                        if !self.contractible(&Self::without(set, v))? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
            }
        })
    }

    /// First vertex of `set` whose unit sphere is not a `(d-1)`-sphere.
    fn failing_vertex(&self, set: &VertexSet, d: i64) -> Result<Option<usize>, TopologyError> {
        let vertices: Vec<usize> = set.ones().collect();
        let verdicts: Vec<bool> = vertices
            .par_iter()
            .map(|&v| self.sphere(&self.graph.sphere_in(v, set), d - 1))
            .collect::<Result<_, _>>()?;
        Ok(vertices.into_iter().zip(verdicts).find(|(_, ok)| !ok).map(|(v, _)| v))
    }

    pub fn dgraph(&self, set: &VertexSet, d: i64) -> Result<bool, TopologyError> {
        if d < 1 {
            return Err(TopologyError::BadDimension(d));
        }
        if set.is_clear() || !self.graph.is_connected_in(set) {
            return Ok(false);
        }
        Ok(self.failing_vertex(set, d)?.is_none())
    }
}

/// Outcome of [`is_contractible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contractibility {
    pub contractible: bool,
    pub collapse_order: Option<Vec<usize>>,
}

pub fn is_contractible(g: &Graph) -> Result<Contractibility, TopologyError> {
    let rec = Recognizer::new(g);
    let order = rec.collapse_order(&g.full_set())?;
    Ok(Contractibility { contractible: order.is_some(), collapse_order: order })
}

/// Replays a collapse order: every removed vertex must have a contractible
/// sphere in what remains, ending in a single vertex.
pub fn replay_collapse(g: &Graph, order: &[usize]) -> Result<bool, TopologyError> {
    let rec = Recognizer::new(g);
    let mut current = g.full_set();
    if order.len() != current.count_ones(..) || order.iter().any(|&v| v >= g.vertex_count()) {
        return Ok(false);
    }
    for &v in &order[..order.len() - 1] {
        if !current.contains(v) || !rec.removable(&current, v)? {
            return Ok(false);
        }
        current.set(v, false);
    }
    Ok(current.count_ones(..) == 1 && current.contains(order[order.len() - 1]))
}

pub fn is_dsphere(g: &Graph, d: i64) -> Result<bool, TopologyError> {
    Recognizer::new(g).sphere(&g.full_set(), d)
}

pub fn is_dgraph(g: &Graph, d: i64) -> Result<bool, TopologyError> {
    Recognizer::new(g).dgraph(&g.full_set(), d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "dim")]
pub enum TopologyKind {
    Contractible,
    DGraph(i64),
    DSphere(i64),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    CollapseOrder(Vec<usize>),
    FailingVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyReport {
    #[serde(flatten)]
    pub kind: TopologyKind,
    pub witness: Option<Witness>,
}

/// Which property a report is asked to establish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Contractible,
    Sphere(i64),
    DGraph(i64),
}

/// Classifies `g` for the requested check. The reported kind is the strongest
/// of the checked properties that holds; a d-sphere report implies the d-graph
/// property as well.
pub fn classify(g: &Graph, check: Check, rec: &Recognizer) -> Result<(bool, TopologyReport), TopologyError> {
    let full = g.full_set();
    let first_vertex = full.ones().next();
    match check {
        Check::Contractible => {
            let order = rec.collapse_order(&full)?;
            let ok = order.is_some();
            let report = TopologyReport {
                kind: if ok { TopologyKind::Contractible } else { TopologyKind::None },
                witness: order.map(Witness::CollapseOrder),
            };
            Ok((ok, report))
        }
        Check::Sphere(d) | Check::DGraph(d) => {
            let is_sphere = rec.sphere(&full, d)?;
            let failing = if d >= 1 && !full.is_clear() { rec.failing_vertex(&full, d)? } else { None };
            let is_dgraph = d >= 1 && !full.is_clear() && g.is_connected() && failing.is_none();
            let kind = if is_sphere && (d < 1 || is_dgraph) {
                TopologyKind::DSphere(d)
            } else if is_dgraph {
                TopologyKind::DGraph(d)
            } else {
                TopologyKind::None
            };
            let witness = match kind {
                TopologyKind::DSphere(_) => match first_vertex {
                    Some(v) => {
                        let mut punctured = full.clone();
                        punctured.set(v, false);
                        rec.collapse_order(&punctured)?.map(Witness::CollapseOrder)
                    }
                    None => None,
                },
                _ => failing.map(Witness::FailingVertex),
            };
            let ok = match check {
                Check::Sphere(_) => is_sphere,
                _ => is_dgraph,
            };
            Ok((ok, TopologyReport { kind, witness }))
        }
    }
}
