//! Column generation for measures with positive Euler curvature.
//!
//! A positive verdict comes with an exactly verified measure. A nonpositive
//! one only covers the explored pool, except when t* meets the Gauss–Bonnet
//! ceiling chi/|V|, which no measure can beat.
//!
//! ```bash
//! cargo run --release --example positive_curvature_search
//! ```

use graphcurv::builders::{cross_polytope, cycle, kuenneth_product, projective_plane};
use graphcurv::graph::Graph;
use graphcurv::lp::{positive_curvature_search, SearchConfig};
use graphcurv::rational::format_rational;

fn run(name: &str, g: &Graph) {
    let report = positive_curvature_search(g, &SearchConfig::default()).unwrap();
    report.certificate.verify().expect("certificate");
    let support = report.measure["colorings"].as_array().map_or(0, Vec::len);
    println!(
        "{name:<18} {:?}: t* = {} (ceiling {}, reached {}), pool {}, support {support}, rounds {}",
        report.status,
        format_rational(&report.t_star),
        format_rational(&report.ceiling),
        report.ceiling_reached,
        report.pool_size,
        report.rounds_used,
    );
}

fn main() {
    run("octahedron", &cross_polytope(3).unwrap());
    run("projective plane", &projective_plane());
    let c4 = cycle(4).unwrap();
    run("torus C_4 x C_4", &kuenneth_product(&c4, &c4).unwrap());
}
