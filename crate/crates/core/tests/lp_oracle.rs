mod common;

use common::maximin_by_vertices;
use graphcurv::lp::{solve_maximin, verify_certificate, CertificateError, IndexMatrix, LpStatus};
use graphcurv::rational::ratio;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rows(rng: &mut impl Rng) -> Vec<Vec<i64>> {
    let m = rng.gen_range(1..=6);
    let n = rng.gen_range(1..=8);
    (0..m).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect()
}

#[test]
fn solver_matches_vertex_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..150 {
        let rows = random_rows(&mut rng);
        let a = IndexMatrix::from_rows(&rows).unwrap();
        let sol = solve_maximin(&a).unwrap();
        assert_eq!(sol.t_star, maximin_by_vertices(&rows), "{rows:?}");
        assert_eq!(verify_certificate(&a, &sol), Ok(()));
        assert_eq!(sol.status == LpStatus::Positive, sol.t_star.is_positive());
    }
}

#[test]
fn spec_examples() {
    let one = IndexMatrix::from_rows(&[vec![1]]).unwrap();
    let sol = solve_maximin(&one).unwrap();
    assert_eq!((sol.t_star.clone(), sol.weights.clone()), (ratio(1, 1), vec![ratio(1, 1)]));

    let pennies = IndexMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
    let sol = solve_maximin(&pennies).unwrap();
    assert_eq!(sol.t_star, ratio(0, 1));
    assert_eq!(sol.weights, vec![ratio(1, 2), ratio(1, 2)]);
}

#[test]
fn tampering_is_caught_with_the_right_name() {
    let a = IndexMatrix::from_rows(&[vec![3, -1, 0], vec![-2, 2, 1], vec![0, 1, -1]]).unwrap();
    let sol = solve_maximin(&a).unwrap();
    let mut w = sol.clone();
    let j = w.weights.iter().position(|x| x.is_positive()).unwrap();
    w.weights[j] -= ratio(1, 1000);
    assert!(matches!(verify_certificate(&a, &w), Err(CertificateError::PrimalValueMismatch { .. })));

    // transposing the roles of primal and dual breaks dual feasibility here
    let mut t = sol.clone();
    t.dual = vec![ratio(1, 1), ratio(0, 1), ratio(0, 1)];
    assert!(matches!(verify_certificate(&a, &t), Err(CertificateError::DualInfeasible { .. })));
}

#[test]
fn more_columns_never_hurt() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let rows = random_rows(&mut rng);
        let a = IndexMatrix::from_rows(&rows).unwrap();
        let extra: Vec<i64> = (0..rows.len()).map(|_| rng.gen_range(-3..=3)).collect();
        let mut wider = a.clone();
        wider.push_column(extra).unwrap();
        assert!(solve_maximin(&wider).unwrap().t_star >= solve_maximin(&a).unwrap().t_star);
    }
}
