//! Index-expectation curvature on finite simple graphs.
//!
//! Graphs carry their Whitney complex: every clique is a simplex. A
//! locally injective function `f` gives every vertex a Poincaré–Hopf index
//! `1 - chi(S_f(v))`, where `S_f(v)` is the part of the unit sphere on which
//! `f` is smaller, and the indices add up to `chi(G)`. Averaging indices over
//! a probability measure on functions is a curvature that satisfies
//! Gauss–Bonnet. The [`lp`] module searches for measures whose curvature is
//! positive everywhere and returns exact rational certificates.
//!
//! Each capability has a runnable example:
//!
//! | example | shows |
//! |---|---|
//! | `clique_complex` | simplices, f-vectors, Euler characteristic |
//! | `recognize_spheres` | contractibility, d-spheres and d-graphs |
//! | `refinement_and_product` | Barycentric refinement and the Künneth product |
//! | `poincare_hopf` | indices, symmetric indices, divisors of vector fields |
//! | `index_expectation` | uniform expectation against Levitt curvature |
//! | `geodesic_wheels` | unit-sphere distances and geodesic wheels |
//! | `crofton_metric` | the Crofton pseudo-metric and its quotient |
//! | `maximin_lp` | the exact maximin solver and its certificate |
//! | `positive_curvature_search` | column generation on small 2-graphs |
//! | `sectional_product` | wheel sites on the 676-vertex product of octahedra |
//!
//! ```bash
//! cargo run --release --example positive_curvature_search
//! ```
//!
//! ```
//! use graphcurv::builders::cross_polytope;
//! use graphcurv::curvature::levitt_curvature_vector;
//! use graphcurv::graph::euler_characteristic;
//! use graphcurv::rational::ratio;
//!
//! let oct = cross_polytope(3).unwrap();
//! assert_eq!(euler_characteristic(&oct).unwrap(), 2);
//! assert!(levitt_curvature_vector(&oct).values.iter().all(|k| *k == ratio(1, 3)));
//! ```

pub mod builders;
pub mod cli;
pub mod config;
pub mod curvature;
pub mod geodesy;
pub mod graph;
pub mod json;
pub mod lp;
pub mod morse;
pub mod rational;
pub mod topology;
