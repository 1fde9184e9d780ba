//! Poincaré–Hopf indices of colorings, their symmetric average, and the
//! divisor of the vector field pointing to the largest vertex.
//!
//! ```bash
//! cargo run --example poincare_hopf -- 7
//! ```

use graphcurv::builders::icosahedron;
use graphcurv::graph::euler_characteristic;
use graphcurv::morse::{divisor_from_field, random_coloring, symmetric_index, FieldAssignment, OrderType};
use graphcurv::rational::format_rational;

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let g = icosahedron();
    let f = random_coloring(&g, seed);
    let order = OrderType::new(&g, &f).unwrap();
    let indices = order.index_vector(&g);

    println!("seed {seed}: indices {:?}", indices.indices);
    println!("sum = {}, chi = {}", indices.sum(), euler_characteristic(&g).unwrap());

    let symmetric: Vec<String> =
        (0..g.vertex_count()).map(|v| format_rational(&symmetric_index(&g, &f, v).unwrap())).collect();
    println!("symmetric indices {symmetric:?}");

    let field = FieldAssignment::towards_maximum(&g, &order);
    let divisor = divisor_from_field(&g, &field).unwrap();
    println!("divisor of the field towards the maximum equals the index vector: {}", divisor == indices);
}
