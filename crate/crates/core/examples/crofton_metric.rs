//! The Crofton pseudo-metric of a signed measure and its metric quotient.
//!
//! An edge costs the weight of the colorings that change sign along it;
//! distances are shortest paths in those costs.
//!
//! ```bash
//! cargo run --example crofton_metric
//! ```

use graphcurv::builders::cycle;
use graphcurv::curvature::Measure;
use graphcurv::geodesy::{crofton_distances_from, kolmogorov_quotient};
use graphcurv::morse::Coloring;
use graphcurv::rational::{format_rational, ratio};

fn main() {
    let g = cycle(6).unwrap();
    let mu = Measure::new(
        &g,
        vec![Coloring::from_integers([1, 2, 3, -1, -2, -3]), Coloring::from_integers([4, -1, -2, -3, -4, 5])],
        vec![ratio(2, 3), ratio(1, 3)],
    )
    .unwrap();

    let d = crofton_distances_from(&g, &mu, 0).unwrap();
    for (v, dv) in d.iter().enumerate() {
        println!("d(0, {v}) = {}", dv.as_ref().map_or("inf".to_string(), format_rational));
    }

    let q = kolmogorov_quotient(&g, &mu).unwrap();
    println!("quotient: {} classes {:?}", q.graph.vertex_count(), q.class_of);
}
