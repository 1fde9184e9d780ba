//! Geodesic wheels at a vertex and their expected index (sectional curvature).
//!
//! ```bash
//! cargo run --example geodesic_wheels
//! ```

use graphcurv::builders::{cross_polytope, icosahedron};
use graphcurv::curvature::{sectional_curvature, Measure};
use graphcurv::geodesy::{enumerate_geodesic_wheels, is_geodesic_wheel, GeodesicMode};
use graphcurv::morse::random_coloring;
use graphcurv::rational::format_rational;

fn main() {
    let g = cross_polytope(4).unwrap();
    for mode in [GeodesicMode::Existential, GeodesicMode::Universal] {
        let found = enumerate_geodesic_wheels(&g, 0, 100, mode).unwrap();
        println!("3-sphere, vertex 0, {mode:?}: {} wheels", found.wheels.len());
        for w in &found.wheels {
            println!("  boundary {:?}", w.boundary());
        }
    }

    let ico = icosahedron();
    let wheel = enumerate_geodesic_wheels(&ico, 0, 10, GeodesicMode::Existential).unwrap().wheels.remove(0);
    let (ok, report) = is_geodesic_wheel(&ico, &wheel, GeodesicMode::Universal).unwrap();
    println!("icosahedron link of 0 is geodesic: {ok}, witnesses {:?}", report.witnesses.len());

    let support: Vec<_> = (0..50).map(|s| random_coloring(&ico, s)).collect();
    let mu = Measure::uniform(&ico, support).unwrap();
    println!("sectional curvature under 50 random colorings: {}", format_rational(&sectional_curvature(&ico, &mu, &wheel).unwrap()));
}
