//! Distances in unit spheres, geodesic wheels and the Crofton pseudo-metric.
//!
//! A wheel is geodesic when its boundary circle `C` in `S(x)` closes a geodesic
//! triangle: for two consecutive boundary vertices `a, b` some `c` on `C`
//! maximizes `d(a,c) + d(b,c)` over the whole sphere, and the two arcs of `C`
//! from `b` to `c` and from `c` back to `a` are shortest paths of `S(x)`.
//! [`GeodesicMode::Existential`] asks this for one consecutive pair,
//! [`GeodesicMode::Universal`] for every consecutive pair of `C`.

use crate::curvature::Measure;
use crate::graph::{Graph, GraphError, Label};
use crate::rational::{signum, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};

pub const DEFAULT_MAX_WHEELS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeodesyError {
    #[error("not a wheel: {0}")]
    NotAWheel(String),
    #[error("coloring {coloring} vanishes at vertex {vertex}; sign changes are undefined at zero")]
    ZeroValue { coloring: usize, vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Center vertex plus a cyclically ordered boundary in its unit sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WheelEmbedding {
    center: usize,
    boundary: Vec<usize>,
}

impl WheelEmbedding {
    /// Unchecked; see [`WheelEmbedding::validate`].
    pub fn new(center: usize, boundary: Vec<usize>) -> Self {
        WheelEmbedding { center, boundary }
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GeodesyError> {
        let err = |msg: String| Err(GeodesyError::NotAWheel(msg));
        g.check_vertex(self.center)?;
        let k = self.boundary.len();
        if k < 4 {
            return err(format!("boundary has {k} vertices, need at least 4"));
        }
        let mut seen = HashSet::with_capacity(k);
        for &b in &self.boundary {
            g.check_vertex(b)?;
            if !seen.insert(b) || b == self.center {
                return err(format!("boundary vertex {b} repeated"));
            }
            if !g.is_adjacent(self.center, b) {
                return err(format!("center {} not adjacent to {b}", self.center));
            }
        }
        for i in 0..k {
            let (a, b) = (self.boundary[i], self.boundary[(i + 1) % k]);
            if !g.is_adjacent(a, b) {
                return err(format!("boundary vertices {a} and {b} not adjacent"));
            }
        }
        Ok(())
    }

    /// Lexicographically smallest rotation or reflection of the boundary.
    pub fn canonical(&self) -> WheelEmbedding {
        let k = self.boundary.len();
        let mut best: Option<Vec<usize>> = None;
        let mut reversed = self.boundary.clone();
        reversed.reverse();
        for seq in [&self.boundary, &reversed] {
            for r in 0..k {
                let cand: Vec<usize> = (0..k).map(|i| seq[(r + i) % k]).collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        WheelEmbedding { center: self.center, boundary: best.unwrap_or_default() }
    }
}

/// Hop distances inside the unit sphere of one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereDistances {
    center: usize,
    /// Sphere vertices (parent ids), increasing.
    vertices: Vec<usize>,
    /// Position of each parent vertex in `vertices`, `usize::MAX` if absent.
    position: Vec<usize>,
    /// `None` marks unreachable pairs.
    dist: Vec<Vec<Option<u32>>>,
}

impl SphereDistances {
    pub fn center(&self) -> usize {
        self.center
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Distance between two sphere vertices given by parent id.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[self.position[u]][self.position[v]]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.position.get(v).is_some_and(|&p| p != usize::MAX)
    }

    pub fn matrix(&self) -> &[Vec<Option<u32>>] {
        &self.dist
    }

    fn sum_to(&self, a: usize, b: usize, c: usize) -> Option<u32> {
        Some(self.get(a, c)? + self.get(b, c)?)
    }

    /// `max_{z in S(x)} d(a,z) + d(b,z)`, `None` when some `z` is unreachable.
    fn max_sum(&self, a: usize, b: usize) -> Option<u32> {
        self.vertices.iter().map(|&z| self.sum_to(a, b, z)).try_fold(0, |m, s| s.map(|s| m.max(s)))
    }
}

/// All-pairs BFS distances in `S(x)`.
pub fn sphere_distances(g: &Graph, x: usize) -> Result<SphereDistances, GeodesyError> {
    g.check_vertex(x)?;
    let sphere = g.neighbor_set(x);
    let vertices: Vec<usize> = g.neighbors(x).to_vec();
    let mut position = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in vertices.iter().enumerate() {
        position[v] = i;
    }
    let dist = vertices
        .iter()
        .map(|&s| {
            let mut row = vec![None; vertices.len()];
            row[position[s]] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let du = row[position[u]].expect("queued vertices are reached");
                for &w in g.neighbors(u) {
                    if sphere.contains(w) && row[position[w]].is_none() {
                        row[position[w]] = Some(du + 1);
                        queue.push_back(w);
                    }
                }
            }
            row
        })
        .collect();
    Ok(SphereDistances { center: x, vertices, position, dist })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeodesicMode {
    #[default]
    Existential,
    Universal,
}

/// A geodesic triangle `a, b, c` on the boundary circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleWitness {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `d(a,c) + d(b,c)`, equal to the maximum over the sphere.
    pub max_sum: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrandCircleReport {
    pub circle: WheelEmbedding,
    pub interpretation: GeodesicMode,
    /// One witness per consecutive pair that closes a geodesic triangle
    /// (existential mode stops at the first).
    pub witnesses: Vec<TriangleWitness>,
}

/// Geodesic triangle closed by the pair at boundary positions `i, i+1`, if any.
fn triangle_at(dist: &SphereDistances, boundary: &[usize], i: usize) -> Option<TriangleWitness> {
    let k = boundary.len();
    let (a, b) = (boundary[i], boundary[(i + 1) % k]);
    let max = dist.max_sum(a, b)?;
    (2..k).find_map(|step| {
        // c sits `step` positions after a; arc b->c avoids a, arc c->a avoids b
        let c = boundary[(i + step) % k];
        let to_c = (step - 1) as u32;
        let back = (k - step) as u32;
        let ok = dist.get(b, c) == Some(to_c) && dist.get(c, a) == Some(back) && dist.sum_to(a, b, c) == Some(max);
        ok.then_some(TriangleWitness { a, b, c, max_sum: max })
    })
}

fn geodesic_with(dist: &SphereDistances, w: &WheelEmbedding, mode: GeodesicMode) -> (bool, Vec<TriangleWitness>) {
    let k = w.boundary.len();
    let mut witnesses = Vec::new();
    for i in 0..k {
        match (triangle_at(dist, &w.boundary, i), mode) {
            (Some(t), GeodesicMode::Existential) => return (true, vec![t]),
            (Some(t), GeodesicMode::Universal) => witnesses.push(t),
            (None, GeodesicMode::Universal) => return (false, witnesses),
            (None, GeodesicMode::Existential) => {}
        }
    }
    let ok = mode == GeodesicMode::Universal;
    (ok, witnesses)
}

pub fn is_geodesic_wheel(g: &Graph, w: &WheelEmbedding, mode: GeodesicMode) -> Result<(bool, GrandCircleReport), GeodesyError> {
    w.validate(g)?;
    let dist = sphere_distances(g, w.center)?;
    let (ok, witnesses) = geodesic_with(&dist, w, mode);
    Ok((ok, GrandCircleReport { circle: w.clone(), interpretation: mode, witnesses }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelEnumeration {
    pub wheels: Vec<WheelEmbedding>,
    pub truncated: bool,
}

/// Shortest paths `from -> to` inside the sphere, excluding `avoid`, in
/// lexicographic order; stops after `limit` paths.
fn shortest_paths(g: &Graph, dist: &SphereDistances, from: usize, to: usize, avoid: &[usize], limit: usize) -> Vec<Vec<usize>> {
    let Some(total) = dist.get(from, to) else { return Vec::new() };
    let mut out = Vec::new();
    let mut path = vec![from];
    fn walk(
        g: &Graph,
        dist: &SphereDistances,
        to: usize,
        total: u32,
        avoid: &[usize],
        limit: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        let u = *path.last().expect("nonempty path");
        if u == to {
            out.push(path.clone());
            return;
        }
        let remaining = total - (path.len() as u32 - 1);
        for &w in g.neighbors(u) {
            if dist.contains(w) && !avoid.contains(&w) && dist.get(w, to) == Some(remaining - 1) {
                path.push(w);
                walk(g, dist, to, total, avoid, limit, path, out);
                path.pop();
            }
        }
    }
    walk(g, dist, to, total, avoid, limit, &mut path, &mut out);
    out
}

fn is_chordless(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    (0..k).all(|i| (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.is_adjacent(cycle[i], cycle[j])))
}

/// Geodesic wheels centered at `x`, built from geodesic triangles: for each
/// sphere edge `a < b` and each maximizer `c` of `d(a,c) + d(b,c)`, every
/// shortest path `b -> c` joined with every shortest path `c -> a` that closes
/// an induced cycle of length at least 4. Deduplicated up to rotation and
/// reflection; universal mode filters the result.
pub fn enumerate_geodesic_wheels(
    g: &Graph,
    x: usize,
    max_count: usize,
    mode: GeodesicMode,
) -> Result<WheelEnumeration, GeodesyError> {
    let dist = sphere_distances(g, x)?;
    let mut seen = HashSet::new();
    let mut wheels = Vec::new();
    for &a in dist.vertices() {
        for &b in g.neighbors(a) {
            if b <= a || !dist.contains(b) {
                continue;
            }
            let Some(max) = dist.max_sum(a, b) else { continue };
            for &c in dist.vertices() {
                if c == a || c == b || dist.sum_to(a, b, c) != Some(max) {
                    continue;
                }
                let limit = max_count.saturating_add(1);
                for p in shortest_paths(g, &dist, b, c, &[a], limit) {
                    let mut avoid = p.clone();
                    avoid.pop();
                    for q in shortest_paths(g, &dist, c, a, &avoid, limit) {
                        let mut cycle = vec![a];
                        cycle.extend_from_slice(&p);
                        cycle.extend_from_slice(&q[1..q.len() - 1]);
                        if cycle.len() < 4 || !is_chordless(g, &cycle) {
                            continue;
                        }
                        let wheel = WheelEmbedding::new(x, cycle).canonical();
                        if !seen.insert(wheel.clone()) {
                            continue;
                        }
                        if mode == GeodesicMode::Universal && !geodesic_with(&dist, &wheel, mode).0 {
                            continue;
                        }
                        if wheels.len() == max_count {
                            return Ok(WheelEnumeration { wheels, truncated: true });
                        }
                        wheels.push(wheel);
                    }
                }
            }
        }
    }
    Ok(WheelEnumeration { wheels, truncated: false })
}

/// Rejects colorings that vanish anywhere.
pub fn check_signed(mu: &Measure) -> Result<(), GeodesyError> {
    for (coloring, f) in mu.support().iter().enumerate() {
        if let Some(vertex) = f.values().iter().position(|v| v.is_zero()) {
            return Err(GeodesyError::ZeroValue { coloring, vertex });
        }
    }
    Ok(())
}

/// Probability that an edge changes sign: `p(u,v) = sum_j w_j [sign f_j(u) != sign f_j(v)]`.
pub fn sign_change_weight(mu: &Measure, u: usize, v: usize) -> Rational {
    mu.support()
        .iter()
        .zip(mu.weights())
        .filter(|(f, _)| signum(&f.values()[u]) != signum(&f.values()[v]))
        .fold(Rational::zero(), |acc, (_, w)| acc + w)
}

/// Expected sign changes along the cheapest path from `a` to every vertex;
/// `None` for vertices in other components.
pub fn crofton_distances_from(g: &Graph, mu: &Measure, a: usize) -> Result<Vec<Option<Rational>>, GeodesyError> {
    g.check_vertex(a)?;
    check_signed(mu)?;
    let mut best: Vec<Option<Rational>> = vec![None; g.vertex_count()];
    let mut done = vec![false; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    best[a] = Some(Rational::zero());
    heap.push(Reverse((Rational::zero(), a)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &v in g.neighbors(u) {
            let cand = &d + sign_change_weight(mu, u, v);
            if best[v].as_ref().is_none_or(|b| cand < *b) {
                best[v] = Some(cand.clone());
                heap.push(Reverse((cand, v)));
            }
        }
    }
    Ok(best)
}

/// `d(a,b) = inf over paths of E[number of sign-changing edges]`; `None` means infinite.
pub fn crofton_distance(g: &Graph, mu: &Measure, a: usize, b: usize) -> Result<Option<Rational>, GeodesyError> {
    g.check_vertex(b)?;
    Ok(crofton_distances_from(g, mu, a)?.swap_remove(b))
}

/// Graph obtained by identifying vertices at Crofton distance zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Graph,
    /// Class id of every vertex of the original graph.
    pub class_of: Vec<usize>,
    /// Smallest original vertex of every class.
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// Distance between two classes, computed between their representatives.
    pub fn distance(&self, g: &Graph, mu: &Measure, i: usize, j: usize) -> Result<Option<Rational>, GeodesyError> {
        crofton_distance(g, mu, self.representatives[i], self.representatives[j])
    }
}

/// Classes are the components of the subgraph of zero-weight edges, numbered by
/// their smallest vertex; two classes are adjacent when an edge joins them.
pub fn kolmogorov_quotient(g: &Graph, mu: &Measure) -> Result<Quotient, GeodesyError> {
    check_signed(mu)?;
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(start);
        class_of[start] = id;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if class_of[v] == usize::MAX && sign_change_weight(mu, u, v).is_zero() {
                    class_of[v] = id;
                    stack.push(v);
                }
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (class_of[u].min(class_of[v]), class_of[u].max(class_of[v])))
        .filter(|(p, q)| p != q)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let labels: Vec<Label> = representatives.iter().map(|&r| g.label(r).clone()).collect();
    let graph = Graph::with_labels(labels, &edges)?;
    Ok(Quotient { graph, class_of, representatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cross_polytope, cycle, icosahedron, wheel};
    use crate::morse::Coloring;
    use crate::rational::{int, ratio};

    #[test]
    fn wheel_validation() {
        let w = wheel(5).unwrap();
        assert!(WheelEmbedding::new(0, vec![1, 2, 3, 4, 5]).validate(&w).is_ok());
        assert!(WheelEmbedding::new(0, vec![1, 2, 3]).validate(&w).is_err());
        assert!(WheelEmbedding::new(0, vec![1, 3, 2, 4, 5]).validate(&w).is_err());
        assert!(WheelEmbedding::new(1, vec![0, 2, 3, 5]).validate(&w).is_err());
        assert_eq!(WheelEmbedding::new(0, vec![3, 2, 1, 5, 4]).canonical().boundary(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn sphere_distance_examples() {
        let oct = cross_polytope(3).unwrap();
        let d = sphere_distances(&oct, 0).unwrap();
        assert_eq!(d.vertices(), &[2, 3, 4, 5]);
        assert_eq!(d.get(2, 3), Some(2));
        assert_eq!(d.get(2, 4), Some(1));
        let ico = icosahedron();
        let d = sphere_distances(&ico, 0).unwrap();
        assert_eq!(d.matrix().iter().flatten().map(|x| x.unwrap()).max(), Some(2));
        // path 1-0-2: the sphere of 0 is two isolated points
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let d = sphere_distances(&g, 0).unwrap();
        assert_eq!(d.get(1, 2), None);
    }

    #[test]
    fn every_wheel_of_a_two_graph_is_geodesic() {
        for g in [cross_polytope(3).unwrap(), icosahedron()] {
            for x in 0..g.vertex_count() {
                for mode in [GeodesicMode::Existential, GeodesicMode::Universal] {
                    let found = enumerate_geodesic_wheels(&g, x, DEFAULT_MAX_WHEELS, mode).unwrap();
                    assert_eq!(found.wheels.len(), 1);
                    assert!(!found.truncated);
                    assert_eq!(found.wheels[0].boundary().len(), g.degree(x));
                    let (ok, report) = is_geodesic_wheel(&g, &found.wheels[0], mode).unwrap();
                    assert!(ok);
                    assert!(!report.witnesses.is_empty());
                }
            }
        }
    }

    #[test]
    fn equators_of_the_three_sphere() {
        let g = cross_polytope(4).unwrap();
        // S(0) is the octahedron on 2..8; 2,4,3,5 is an equator through antipodes 2,3 and 4,5
        let w = WheelEmbedding::new(0, vec![2, 4, 3, 5]);
        for mode in [GeodesicMode::Existential, GeodesicMode::Universal] {
            assert!(is_geodesic_wheel(&g, &w, mode).unwrap().0);
        }
        let found = enumerate_geodesic_wheels(&g, 0, DEFAULT_MAX_WHEELS, GeodesicMode::Existential).unwrap();
        assert_eq!(found.wheels.len(), 3);
        let capped = enumerate_geodesic_wheels(&g, 0, 2, GeodesicMode::Existential).unwrap();
        assert_eq!((capped.wheels.len(), capped.truncated), (2, true));
    }

    #[test]
    fn crofton_examples() {
        let c4 = cycle(4).unwrap();
        let f = Coloring::from_integers([1, -1, -2, 2]);
        let mu = Measure::dirac(&c4, f).unwrap();
        assert_eq!(crofton_distance(&c4, &mu, 0, 2).unwrap(), Some(int(1)));
        assert_eq!(crofton_distance(&c4, &mu, 0, 3).unwrap(), Some(int(0)));
        let positive = Measure::uniform(&c4, vec![Coloring::from_integers([1, 2, 3, 4]), Coloring::from_integers([4, 3, 2, 1])]).unwrap();
        assert_eq!(crofton_distance(&c4, &positive, 0, 2).unwrap(), Some(int(0)));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let mu = Measure::dirac(&g, Coloring::from_integers([1, -1, 5])).unwrap();
        assert_eq!(crofton_distance(&g, &mu, 0, 2).unwrap(), None);
        let half = Measure::uniform(&c4, vec![Coloring::from_integers([1, -1, -2, 2]), Coloring::from_integers([1, 2, 3, 4])]).unwrap();
        assert_eq!(crofton_distance(&c4, &half, 0, 1).unwrap(), Some(ratio(1, 2)));
        let zero = Measure::dirac(&c4, Coloring::from_integers([0, 1, 2, 3])).unwrap();
        assert_eq!(crofton_distance(&c4, &zero, 0, 1), Err(GeodesyError::ZeroValue { coloring: 0, vertex: 0 }));
    }

    #[test]
    fn quotients() {
        let c4 = cycle(4).unwrap();
        let all_change = Measure::dirac(&c4, Coloring::from_integers([1, -1, 2, -2])).unwrap();
        let q = kolmogorov_quotient(&c4, &all_change).unwrap();
        assert_eq!(q.graph, c4);
        assert_eq!(q.class_of, vec![0, 1, 2, 3]);
        let none_change = Measure::dirac(&c4, Coloring::from_integers([1, 2, 3, 4])).unwrap();
        let q = kolmogorov_quotient(&c4, &none_change).unwrap();
        assert_eq!(q.graph.vertex_count(), 1);
        let f = Coloring::from_integers([1, -1, -2, 2]);
        let q = kolmogorov_quotient(&c4, &Measure::dirac(&c4, f.clone()).unwrap()).unwrap();
        assert_eq!(q.class_of, vec![0, 1, 1, 0]);
        assert_eq!(q.graph.edge_count(), 1);
        assert_eq!(q.distance(&c4, &Measure::dirac(&c4, f).unwrap(), 0, 1).unwrap(), Some(int(1)));
    }
}
