//! Cliques, f-vectors and Euler characteristics of the built-in families.
//!
//! ```bash
//! cargo run --example clique_complex
//! ```

use graphcurv::builders::{complete, cross_polytope, cycle, icosahedron, projective_plane, wheel};
use graphcurv::graph::{cliques, euler_characteristic, f_vector, Graph};

fn show(name: &str, g: &Graph) {
    let f = f_vector(g);
    println!(
        "{name:<16} |V|={:<3} f={:?} chi={}",
        g.vertex_count(),
        f.counts,
        euler_characteristic(g).expect("small complex")
    );
}

fn main() {
    show("cycle C_5", &cycle(5).unwrap());
    show("wheel W_6", &wheel(6).unwrap());
    show("K_4", &complete(4));
    show("octahedron", &cross_polytope(3).unwrap());
    show("cross_polytope 4", &cross_polytope(4).unwrap());
    show("icosahedron", &icosahedron());
    show("projective plane", &projective_plane());

    println!("\ntriangles of the wheel W_4:");
    for s in cliques(&wheel(4).unwrap(), None).into_iter().filter(|s| s.dim() == 2) {
        println!("  {s}");
    }
}
