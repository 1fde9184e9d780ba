//! Contractibility, d-spheres and d-graphs with witnesses.
//!
//! ```bash
//! cargo run --example recognize_spheres
//! ```

use graphcurv::builders::{cross_polytope, cycle, icosahedron, projective_plane, wheel};
use graphcurv::graph::{euler_characteristic, Graph};
use graphcurv::topology::{classify, is_contractible, Check, Recognizer};

fn report(name: &str, g: &Graph, check: Check) {
    let rec = Recognizer::new(g);
    let (holds, report) = classify(g, check, &rec).expect("within budget");
    println!(
        "{name:<18} {check:<14} holds={holds:<5} kind={:?} witness={:?} nodes={}",
        report.kind,
        report.witness,
        rec.nodes_visited(),
        check = format!("{check:?}"),
    );
}

fn main() {
    let w5 = wheel(5).unwrap();
    let c = is_contractible(&w5).unwrap();
    println!("wheel W_5 contractible: {} via {:?}", c.contractible, c.collapse_order);

    report("C_5", &cycle(5).unwrap(), Check::Sphere(1));
    report("octahedron", &cross_polytope(3).unwrap(), Check::Sphere(2));
    report("icosahedron", &icosahedron(), Check::Sphere(2));
    report("cross_polytope 4", &cross_polytope(4).unwrap(), Check::Sphere(3));

    let rp2 = projective_plane();
    report("projective plane", &rp2, Check::DGraph(2));
    report("projective plane", &rp2, Check::Sphere(2));
    println!("projective plane chi = {}", euler_characteristic(&rp2).unwrap());
}
