//! Sectional mode on the 676-vertex product of two octahedra: geodesic
//! wheels at every vertex become the constraint sites of the program.
//! No sign is expected here; the point is a verified report.
//!
//! ```bash
//! cargo run --release --example sectional_product -- 2
//! ```

use graphcurv::builders::{cross_polytope, kuenneth_product};
use graphcurv::lp::{positive_curvature_search, SearchConfig, SiteMode};
use graphcurv::rational::format_rational;
use std::time::Instant;

fn main() {
    let wheel_cap = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let oct = cross_polytope(3).unwrap();
    let g = kuenneth_product(&oct, &oct).unwrap();
    let config = SearchConfig {
        mode: SiteMode::Sectional,
        rounds: 3,
        initial_pool: 8,
        wheel_cap,
        evaluations: 20_000,
        ..SearchConfig::default()
    };
    let start = Instant::now();
    let report = positive_curvature_search(&g, &config).unwrap();
    report.certificate.verify().expect("certificate");
    println!("{} wheel sites, pool {}, {} pivots", report.sites.len(), report.pool_size, report.pivots);
    println!("{:?}: t* = {}  ({:.1?})", report.status, format_rational(&report.t_star), start.elapsed());
    println!("{}", report.statement);
}
