//! Deterministic constructors for the graphs used throughout the crate.

use crate::graph::{cliques, Graph, GraphError, Label, Simplex};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("{what} requires {param} >= {min}, got {got}")]
    ParameterTooSmall { what: &'static str, param: &'static str, min: usize, got: usize },
    #[error("product factors must be nonempty")]
    EmptyFactor,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn require(what: &'static str, param: &'static str, min: usize, got: usize) -> Result<(), BuildError> {
    if got < min {
        Err(BuildError::ParameterTooSmall { what, param, min, got })
    } else {
        Ok(())
    }
}

/// Cycle `C_n` on `0..n` with edges `i ~ i+1 mod n`.
pub fn cycle(n: usize) -> Result<Graph, BuildError> {
    require("cycle", "n", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Wheel with center `0` and boundary cycle `1..=n`.
pub fn wheel(n: usize) -> Result<Graph, BuildError> {
    require("wheel", "n", 4, n)?;
    let mut edges: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    edges.extend((0..n).map(|i| (1 + i, 1 + (i + 1) % n)));
    Ok(Graph::from_edges(n + 1, &edges)?)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// Boundary of the `d`-dimensional cross-polytope: `2d` vertices where `2i` and
/// `2i+1` are the antipodal (non-adjacent) pairs. A `(d-1)`-sphere.
pub fn cross_polytope(d: usize) -> Result<Graph, BuildError> {
    require("cross_polytope", "d", 1, d)?;
    let n = 2 * d;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2)
        .collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// The 12-vertex icosahedron: apex `0`, upper ring `1..=5`, lower ring `6..=10`, apex `11`.
pub fn icosahedron() -> Graph {
    let upper = |i: usize| 1 + i % 5;
    let lower = |i: usize| 6 + i % 5;
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        edges.push((0, upper(i)));
        edges.push((upper(i), upper(i + 1)));
        edges.push((upper(i), lower(i)));
        edges.push((upper(i), lower(i + 1)));
        edges.push((lower(i), lower(i + 1)));
        edges.push((lower(i), 11));
    }
    Graph::from_edges(12, &edges).expect("icosahedron is simple")
}

/// Simplices of a complex with their coface lists.
struct FacePoset {
    simplices: Vec<Simplex>,
    /// `cofaces[i]`: indices of all simplices containing simplex `i`, itself included.
    cofaces: Vec<Vec<usize>>,
    /// `faces[i]`: indices of all proper faces of simplex `i`.
    faces: Vec<Vec<usize>>,
}

impl FacePoset {
    /// `simplices` must be closed under taking faces.
    fn new(simplices: Vec<Simplex>) -> Self {
        let index: HashMap<&Simplex, usize> = simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut cofaces = vec![Vec::new(); simplices.len()];
        let mut faces = vec![Vec::new(); simplices.len()];
        for (j, x) in simplices.iter().enumerate() {
            for y in x.faces() {
                let i = *index.get(&y).expect("complex must be closed under faces");
                cofaces[i].push(j);
                if i != j {
                    faces[j].push(i);
                }
            }
        }
        for c in &mut cofaces {
            c.sort_unstable();
        }
        FacePoset { simplices, cofaces, faces }
    }

    fn simplex_label(&self, i: usize, labels: &[Label]) -> String {
        let parts: Vec<String> = self.simplices[i].vertices().iter().map(|&v| labels[v].to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    fn barycentric(&self, labels: &[Label]) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .enumerate()
            .flat_map(|(j, fs)| fs.iter().map(move |&i| (i, j)))
            .collect();
        let labels = (0..self.simplices.len()).map(|i| Label::Str(self.simplex_label(i, labels))).collect();
        Graph::with_labels(labels, &edges).expect("face poset comparability graph is simple")
    }
}

/// Barycentric refinement: one vertex per simplex, edges for strict containment.
pub fn barycentric(g: &Graph) -> Graph {
    FacePoset::new(cliques(g, None)).barycentric(g.labels())
}

/// Vertex of a Künneth product: a simplex of each factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub a: Simplex,
    pub b: Simplex,
}

/// Künneth product together with the simplex pair behind every vertex.
pub fn kuenneth_product_with_vertices(g: &Graph, h: &Graph) -> Result<(Graph, Vec<ProductVertex>), BuildError> {
    if g.is_empty() || h.is_empty() {
        return Err(BuildError::EmptyFactor);
    }
    let pg = FacePoset::new(cliques(g, None));
    let ph = FacePoset::new(cliques(h, None));
    let nh = ph.simplices.len();
    let id = |i: usize, k: usize| i * nh + k;
    let mut edges = Vec::new();
    for i in 0..pg.simplices.len() {
        for k in 0..nh {
            for &i2 in &pg.cofaces[i] {
                for &k2 in &ph.cofaces[k] {
                    if (i2, k2) != (i, k) {
                        edges.push((id(i, k), id(i2, k2)));
                    }
                }
            }
        }
    }
    let mut vertices = Vec::with_capacity(pg.simplices.len() * nh);
    let mut labels = Vec::with_capacity(vertices.capacity());
    for i in 0..pg.simplices.len() {
        for k in 0..nh {
            vertices.push(ProductVertex { a: pg.simplices[i].clone(), b: ph.simplices[k].clone() });
            labels.push(Label::Str(format!(
                "({},{})",
                pg.simplex_label(i, g.labels()),
                ph.simplex_label(k, h.labels())
            )));
        }
    }
    Ok((Graph::with_labels(labels, &edges)?, vertices))
}

/// Künneth product: pairs of simplices, adjacent when one pair contains the
/// other componentwise. Vertex ids follow lexicographic (simplex of `g`,
/// simplex of `h`) order.
pub fn kuenneth_product(g: &Graph, h: &Graph) -> Result<Graph, BuildError> {
    kuenneth_product_with_vertices(g, h).map(|(graph, _)| graph)
}

/// Triangles of the 6-vertex projective plane (antipodal quotient of the icosahedron).
pub const HEMI_ICOSAHEDRON: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [3, 4, 6],
    [2, 4, 5],
    [3, 5, 6],
    [2, 4, 6],
];

/// Projective plane as a 2-graph: Barycentric refinement of the hemi-icosahedron
/// (31 vertices).
pub fn projective_plane() -> Graph {
    let mut simplices: Vec<Simplex> = HEMI_ICOSAHEDRON
        .iter()
        .flat_map(|t| Simplex::new(t.iter().map(|v| v - 1).collect()).expect("sorted triangle").faces())
        .collect();
    simplices.sort_by(|x, y| x.vertices().len().cmp(&y.vertices().len()).then(x.cmp(y)));
    simplices.dedup();
    let labels: Vec<Label> = (1..=6).map(Label::from).collect();
    FacePoset::new(simplices).barycentric(&labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{euler_characteristic, f_vector};

    fn chi(g: &Graph) -> i64 {
        euler_characteristic(g).unwrap()
    }

    #[test]
    fn parameter_bounds() {
        assert!(cycle(2).is_err());
        assert!(wheel(3).is_err());
        assert!(cross_polytope(0).is_err());
        assert!(matches!(kuenneth_product(&Graph::empty(), &complete(1)), Err(BuildError::EmptyFactor)));
    }

    #[test]
    fn platonic_counts() {
        let oct = cross_polytope(3).unwrap();
        assert_eq!(chi(&oct), 2);
        let c4 = cross_polytope(4).unwrap();
        assert_eq!((c4.vertex_count(), chi(&c4)), (8, 0));
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.vertex_count(), chi(&w5)), (6, 1));
        let ico = icosahedron();
        assert_eq!(f_vector(&ico).counts, vec![12, 30, 20]);
        assert!((0..12).all(|v| ico.degree(v) == 5));
    }

    #[test]
    fn barycentric_refinements() {
        assert_eq!(barycentric(&cross_polytope(3).unwrap()).vertex_count(), 26);
        assert_eq!(barycentric(&complete(1)), Graph::with_labels(vec![Label::Str("[0]".into())], &[]).unwrap());
        let b = barycentric(&cycle(4).unwrap());
        assert_eq!((b.vertex_count(), b.edge_count()), (8, 8));
        assert!((0..8).all(|v| b.degree(v) == 2));
        assert!(b.is_connected());
    }

    #[test]
    fn product_with_point_is_refinement() {
        let h = cross_polytope(3).unwrap();
        let p = kuenneth_product(&complete(1), &h).unwrap();
        let b = barycentric(&h);
        assert_eq!(p.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn hemi_icosahedron_is_a_closed_surface() {
        let mut edge_use: HashMap<(usize, usize), usize> = HashMap::new();
        for t in HEMI_ICOSAHEDRON {
            for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                *edge_use.entry((a, b)).or_default() += 1;
            }
        }
        assert_eq!(edge_use.len(), 15);
        assert!(edge_use.values().all(|&c| c == 2));
        let rp2 = projective_plane();
        assert_eq!(rp2.vertex_count(), 31);
        assert_eq!(chi(&rp2), 1);
    }
}
