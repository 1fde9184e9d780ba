//! Barycentric refinement and the Künneth product of graphs.
//!
//! The refinement of the octahedron has 26 vertices, one per simplex, and
//! the product of the octahedron with itself is a 4-graph with 26^2 vertices
//! and Euler characteristic 2 * 2 = 4.
//!
//! ```bash
//! cargo run --release --example refinement_and_product
//! ```

use graphcurv::builders::{barycentric, cross_polytope, cycle, kuenneth_product};
use graphcurv::graph::euler_characteristic;
use graphcurv::topology::is_dgraph;
use std::time::Instant;

fn main() {
    let oct = cross_polytope(3).unwrap();
    let refined = barycentric(&oct);
    println!("octahedron: {} vertices, refinement: {} vertices", oct.vertex_count(), refined.vertex_count());

    let c4 = cycle(4).unwrap();
    let torus = kuenneth_product(&c4, &c4).unwrap();
    println!(
        "C_4 x C_4: {} vertices, chi = {}, 2-graph: {}",
        torus.vertex_count(),
        euler_characteristic(&torus).unwrap(),
        is_dgraph(&torus, 2).unwrap()
    );

    let start = Instant::now();
    let square = kuenneth_product(&oct, &oct).unwrap();
    println!(
        "octahedron x octahedron: {} vertices, {} edges, chi = {}",
        square.vertex_count(),
        square.edge_count(),
        euler_characteristic(&square).unwrap()
    );
    println!("  4-graph: {}  ({:.1?})", is_dgraph(&square, 4).unwrap(), start.elapsed());
}
