//! Finite simple graphs and their Whitney (clique) complexes.
//!
//! Vertices are dense ids `0..n`. The original vertex labels are kept for I/O
//! only. Every neighborhood is stored twice: as a sorted list for iteration and
//! as a bitset so that induced subgraphs can be described by a [`VertexSet`] of
//! the parent graph without copying adjacency.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Subset of the vertices of a parent graph.
pub type VertexSet = FixedBitSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("no such vertex: {0}")]
    NoSuchVertex(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(String, String),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("simplex must be a nonempty strictly increasing vertex list")]
    MalformedSimplex,
    #[error("Euler characteristic overflows i64")]
    Overflow,
}

/// External vertex id: JSON integers or strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Str(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Str(s) => f.write_str(s),
        }
    }
}

impl From<usize> for Label {
    fn from(v: usize) -> Self {
        Label::Int(v as i64)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Str(s.to_string())
    }
}

/// Immutable finite simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Label>,
    adj: Vec<Vec<usize>>,
    bits: Vec<FixedBitSet>,
}

impl Graph {
    /// Graph on `0..n` labelled by the ids themselves.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_labels((0..n).map(Label::from).collect(), edges)
    }

    pub fn with_labels(labels: Vec<Label>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l) {
                return Err(GraphError::DuplicateVertex(l.to_string()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        let mut bits = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::NoSuchVertex(w.to_string()));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(labels[u].to_string()));
            }
            if bits[u].contains(v) {
                return Err(GraphError::DuplicateEdge(labels[u].to_string(), labels[v].to_string()));
            }
            bits[u].insert(v);
            bits[v].insert(u);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { labels, adj, bits })
    }

    pub fn empty() -> Self {
        Graph { labels: Vec::new(), adj: Vec::new(), bits: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.bits[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u].contains(v)
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    /// Dense id of the vertex whose label prints as `text`.
    pub fn find_label(&self, text: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.to_string() == text)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex(v.to_string()))
        }
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, vertices: &[usize]) -> Result<VertexSet, GraphError> {
        let mut s = FixedBitSet::with_capacity(self.vertex_count());
        for &v in vertices {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    /// Neighbors of `v` that lie in `within`.
    pub fn sphere_in(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut s = self.bits[v].clone();
        s.intersect_with(within);
        s
    }

    /// Unit sphere `S(v)`: the subgraph induced on the neighbors of `v`.
    pub fn unit_sphere(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced_by_set(&self.bits[v]))
    }

    /// Subgraph induced on `vertices`; labels are carried over from the parent.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let set = self.set_of(vertices)?;
        Ok(self.induced_by_set(&set))
    }

    pub fn induced_by_set(&self, set: &VertexSet) -> Graph {
        let kept: Vec<usize> = set.ones().collect();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = kept
            .iter()
            .flat_map(|&u| {
                let index = &index;
                self.adj[u]
                    .iter()
                    .filter(move |&&v| v > u && set.contains(v))
                    .map(move |&v| (index[u], index[v]))
            })
            .collect();
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::with_labels(labels, &edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Connected components of the subgraph induced on `set`, each as a vertex set.
    pub fn components_in(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut unvisited = set.clone();
        let mut out = Vec::new();
        while let Some(start) = unvisited.ones().next() {
            let mut comp = FixedBitSet::with_capacity(self.vertex_count());
            let mut stack = vec![start];
            unvisited.set(start, false);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if unvisited.contains(w) {
                        unvisited.set(w, false);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected_in(&self, set: &VertexSet) -> bool {
        self.components_in(set).len() == 1
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_in(&self.full_set())
    }

    /// Number of simplices per dimension in the clique complex of the subgraph
    /// induced on `set`.
    pub fn f_vector_in(&self, set: &VertexSet) -> FVector {
        let mut counts = Vec::new();
        let mut cand = set.clone();
        count_cliques(self, &mut cand, 0, &mut counts);
        FVector { counts }
    }

    /// Euler characteristic of the clique complex induced on `set`.
    pub fn euler_in(&self, set: &VertexSet) -> i64 {
        let mut cand = set.clone();
        signed_clique_sum(self, &mut cand, 1)
    }
}

fn count_cliques(g: &Graph, cand: &mut VertexSet, depth: usize, counts: &mut Vec<u64>) {
    while let Some(v) = cand.ones().next() {
        cand.set(v, false);
        if counts.len() <= depth {
            counts.push(0);
        }
        counts[depth] += 1;
        let mut next = cand.clone();
        next.intersect_with(&g.bits[v]);
        if !next.is_clear() {
            count_cliques(g, &mut next, depth + 1, counts);
        }
    }
}

fn signed_clique_sum(g: &Graph, cand: &mut VertexSet, sign: i64) -> i64 {
    let mut total = 0i64;
    while let Some(v) = cand.ones().next() {
        cand.set(v, false);
        total += sign;
        let mut next = cand.clone();
        next.intersect_with(&g.bits[v]);
        if !next.is_clear() {
            total += signed_clique_sum(g, &mut next, -sign);
        }
    }
    total
}

/// Complete subgraph given by its strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::MalformedSimplex);
        }
        Ok(Simplex(vertices))
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(mut vertices: Vec<usize>) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        vertices.dedup();
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `(-1)^dim`
    pub fn energy(&self) -> i64 {
        if self.dim() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// All nonempty faces, the simplex itself included.
    pub fn faces(&self) -> Vec<Simplex> {
        let k = self.0.len();
        (1u32..(1 << k))
            .map(|mask| {
                Simplex((0..k).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
            })
            .collect()
    }

    pub fn is_clique_of(&self, g: &Graph) -> bool {
        self.0.iter().all(|&v| v < g.vertex_count())
            && self
                .0
                .iter()
                .enumerate()
                .all(|(i, &u)| self.0[i + 1..].iter().all(|&v| g.is_adjacent(u, v)))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Simplex counts `f_0, f_1, ...` of a clique complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FVector {
    pub counts: Vec<u64>,
}

impl FVector {
    /// `f_k`, zero beyond the clique number.
    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> Result<i64, GraphError> {
        self.counts.iter().enumerate().try_fold(0i64, |acc, (k, &c)| {
            let c = i64::try_from(c).map_err(|_| GraphError::Overflow)?;
            let term = if k % 2 == 0 { c } else { -c };
            acc.checked_add(term).ok_or(GraphError::Overflow)
        })
    }
}

/// All complete subgraphs up to dimension `kmax`, ordered by dimension and then
/// lexicographically.
pub fn cliques(g: &Graph, kmax: Option<usize>) -> Vec<Simplex> {
    let max_len = kmax.map(|k| k + 1).unwrap_or(usize::MAX);
    let per_root: Vec<Vec<Simplex>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            let mut cand = g.neighbor_set(v).clone();
            cand.set_range(..v + 1, false);
            let mut stack = vec![v];
            extend_cliques(g, &mut stack, &mut cand, max_len, &mut out);
            out
        })
        .collect();
    let mut all: Vec<Simplex> = per_root.into_iter().flatten().collect();
    all.sort_by_key(|s| s.0.len());
    all
}

fn extend_cliques(
    g: &Graph,
    stack: &mut Vec<usize>,
    cand: &mut VertexSet,
    max_len: usize,
    out: &mut Vec<Simplex>,
) {
    out.push(Simplex(stack.clone()));
    if stack.len() >= max_len {
        return;
    }
    while let Some(v) = cand.ones().next() {
        cand.set(v, false);
        let mut next = cand.clone();
        next.intersect_with(g.neighbor_set(v));
        stack.push(v);
        extend_cliques(g, stack, &mut next, max_len, out);
        stack.pop();
    }
}

pub fn f_vector(g: &Graph) -> FVector {
    g.f_vector_in(&g.full_set())
}

/// `chi(G) = sum_k (-1)^k f_k`; zero for the empty graph.
pub fn euler_characteristic(g: &Graph) -> Result<i64, GraphError> {
    f_vector(g).euler_characteristic()
}

/// Wire form: `{"vertices":[ids...],"edges":[[u,v],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph, GraphError> {
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, l) in self.vertices.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.to_string()));
            }
        }
        let lookup = |l: &Label| index.get(l).copied().ok_or_else(|| GraphError::NoSuchVertex(l.to_string()));
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut seen = HashSet::new();
        for [a, b] in &self.edges {
            let (u, v) = (lookup(a)?, lookup(b)?);
            if u == v {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
            }
            edges.push((u, v));
        }
        Graph::with_labels(self.vertices, &edges)
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels.clone(),
            edges: g.edges().map(|(u, v)| [g.labels[u].clone(), g.labels[v].clone()]).collect(),
        }
    }
}
