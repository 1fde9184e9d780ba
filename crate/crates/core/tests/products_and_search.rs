mod common;

use graphcurv::builders::{barycentric, cross_polytope, cycle, icosahedron, kuenneth_product, projective_plane};
use graphcurv::curvature::{expectation_curvature, uniform_curvature, levitt_curvature_vector, UniformMode};
use graphcurv::graph::euler_characteristic;
use graphcurv::json::measure_from_value;
use graphcurv::lp::{positive_curvature_search, SearchConfig, SearchStatus};
use graphcurv::rational::ratio;
use graphcurv::topology::{is_dgraph, is_dsphere, Recognizer};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn product_of_octahedra() {
    let oct = cross_polytope(3).unwrap();
    assert_eq!(barycentric(&oct).vertex_count(), 26);
    let p = kuenneth_product(&oct, &oct).unwrap();
    assert_eq!(p.vertex_count(), 676);
    assert_eq!(euler_characteristic(&p).unwrap(), 4);
    assert!(is_dgraph(&p, 4).unwrap());
}

#[test]
fn torus_and_mixed_products() {
    let c4 = cycle(4).unwrap();
    let torus = kuenneth_product(&c4, &c4).unwrap();
    assert_eq!(euler_characteristic(&torus).unwrap(), 0);
    assert!(is_dgraph(&torus, 2).unwrap());
    assert!(!is_dsphere(&torus, 2).unwrap());

    let oct = cross_polytope(3).unwrap();
    let mixed = kuenneth_product(&oct, &c4).unwrap();
    assert_eq!(euler_characteristic(&mixed).unwrap(), 0);
    assert!(is_dgraph(&mixed, 3).unwrap());
}

#[test]
fn chi_is_multiplicative_on_small_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..20 {
        let g = common::random_graph(4, 0.6, &mut rng);
        let h = common::random_graph(4, 0.6, &mut rng);
        let p = kuenneth_product(&g, &h).unwrap();
        assert_eq!(euler_characteristic(&p).unwrap(), euler_characteristic(&g).unwrap() * euler_characteristic(&h).unwrap());
    }
}

#[test]
fn memo_agrees_on_spheres() {
    for g in [icosahedron(), cross_polytope(4).unwrap(), barycentric(&cycle(6).unwrap())] {
        let (a, b) = (Recognizer::new(&g), Recognizer::without_memo(&g));
        let full = g.full_set();
        for d in 0..=3 {
            assert_eq!(a.sphere(&full, d).unwrap(), b.sphere(&full, d).unwrap());
        }
    }
}

#[test]
fn uniform_equals_levitt_on_a_corpus() {
    for g in common::connected_corpus(30, 6, 5) {
        let exact = uniform_curvature(&g, UniformMode::Exact { limit: 6 }).unwrap();
        assert_eq!(exact.values(), &levitt_curvature_vector(&g));
    }
}

#[test]
fn search_verdicts() {
    let oct = cross_polytope(3).unwrap();
    let r = positive_curvature_search(&oct, &SearchConfig::default()).unwrap();
    assert_eq!(r.status, SearchStatus::Positive);
    assert!(r.t_star >= ratio(1, 3));

    // the reported measure really has the reported curvature
    let mu = measure_from_value(&oct, &r.measure).unwrap();
    let k = expectation_curvature(&oct, &mu);
    assert_eq!(k.min().unwrap(), &r.t_star);

    let rp2 = projective_plane();
    let r = positive_curvature_search(&rp2, &SearchConfig::default()).unwrap();
    assert_eq!(r.status, SearchStatus::Positive);
    r.certificate.verify().unwrap();
    let mu = measure_from_value(&rp2, &r.measure).unwrap();
    let k = expectation_curvature(&rp2, &mu);
    assert_eq!(k.total(), ratio(1, 1));
    assert!(k.values.iter().all(|x| *x > ratio(0, 1)));
}
