//! Curvature as an expectation of indices.
//!
//! Averaging over all vertex orders gives the Levitt curvature
//! `1 - f0/2 + f1/3 - ...` of the unit sphere. For wheel centers that is
//! `1 - |C|/6`: 1/3 for |C| = 4 and 1/6 for |C| = 5.
//!
//! ```bash
//! cargo run --release --example index_expectation
//! ```

use graphcurv::builders::{icosahedron, wheel};
use graphcurv::curvature::{gauss_bonnet_check, levitt_curvature, levitt_curvature_vector, uniform_curvature, UniformMode};
use graphcurv::rational::format_rational;

fn main() {
    for k in 4..=7 {
        let w = wheel(k).unwrap();
        let exact = uniform_curvature(&w, UniformMode::Exact { limit: 8 }).unwrap();
        println!(
            "wheel |C|={k}: uniform {} levitt {}",
            format_rational(&exact.values().values[0]),
            format_rational(&levitt_curvature(&w, 0).unwrap())
        );
    }

    let ico = icosahedron();
    let k = levitt_curvature_vector(&ico);
    let gb = gauss_bonnet_check(&ico, &k).unwrap();
    println!("icosahedron: K(v) = {} everywhere, total {} (Gauss-Bonnet {})", format_rational(&k.values[0]), format_rational(&k.total()), gb.holds);

    if let graphcurv::curvature::UniformCurvature::Sampled { estimate, std_error, samples } =
        uniform_curvature(&ico, UniformMode::Sampling { samples: 4000, seed: 5 }).unwrap()
    {
        println!("sampled over {samples} orders: K(0) ~ {} +- {:.4}", format_rational(&estimate.values[0]), std_error[0]);
    }
}
