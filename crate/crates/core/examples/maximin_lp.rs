//! The exact maximin solver and its certificate check on a small matrix.
//!
//! ```bash
//! cargo run --example maximin_lp
//! ```

use graphcurv::lp::{solve_maximin, verify_certificate, IndexMatrix};
use graphcurv::rational::{format_rational, ratio};

fn main() {
    let a = IndexMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 1, 1], vec![0, 1, -2]]).unwrap();
    let sol = solve_maximin(&a).unwrap();
    let show = |v: &[_]| v.iter().map(format_rational).collect::<Vec<_>>().join(", ");
    println!("t* = {} ({:?}, {} pivots)", format_rational(&sol.t_star), sol.status, sol.pivots);
    println!("weights [{}]", show(&sol.weights));
    println!("dual    [{}]", show(&sol.dual));
    println!("certificate: {:?}", verify_certificate(&a, &sol));

    let mut tampered = sol.clone();
    tampered.weights[0] += ratio(1, 1000);
    println!("tampered:    {}", verify_certificate(&a, &tampered).unwrap_err());
}
