mod common;

use common::{chi_by_subsets, shortest_by_paths};
use graphcurv::curvature::Measure;
use graphcurv::geodesy::crofton_distance;
use graphcurv::graph::{cliques, euler_characteristic, Graph, Simplex};
use graphcurv::morse::{index_vector, Coloring, OrderType};
use graphcurv::rational::{int, ratio, Rational};
use graphcurv::topology::{is_contractible, Recognizer};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn shuffled_values(n: usize, seed: u64) -> Vec<i64> {
    let mut values: Vec<i64> = (0..n as i64).collect();
    values.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    values
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chi_matches_subset_enumeration(g in graph_strategy(9)) {
        prop_assert_eq!(euler_characteristic(&g).unwrap(), chi_by_subsets(&g));
    }

    #[test]
    fn cliques_are_closed_under_faces(g in graph_strategy(9)) {
        let all = cliques(&g, None);
        let set: HashSet<&Simplex> = all.iter().collect();
        prop_assert_eq!(set.len(), all.len());
        for s in &all {
            let vs = s.vertices();
            if vs.len() < 2 {
                continue;
            }
            for skip in 0..vs.len() {
                let face: Vec<usize> = vs.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                prop_assert!(set.contains(&Simplex::new(face).unwrap()));
            }
        }
    }

    #[test]
    fn indices_sum_to_chi(g in graph_strategy(9), seed in any::<u64>()) {
        let f = Coloring::from_integers(shuffled_values(g.vertex_count(), seed));
        let iv = index_vector(&g, &f).unwrap();
        prop_assert_eq!(iv.sum(), euler_characteristic(&g).unwrap());
    }

    #[test]
    fn indices_see_only_the_order(g in graph_strategy(8), seed in any::<u64>(), scale in 1i64..50, shift in -100i64..100) {
        let base = shuffled_values(g.vertex_count(), seed);
        let f = Coloring::from_integers(base.iter().copied());
        // strictly increasing maps keep the order type
        let cubed = Coloring::new(base.iter().map(|&x| int(x * x * x) * ratio(scale, 7) + int(shift)).collect());
        prop_assert_eq!(index_vector(&g, &f).unwrap(), index_vector(&g, &cubed).unwrap());
        prop_assert_eq!(OrderType::new(&g, &f).unwrap(), OrderType::new(&g, &cubed).unwrap());
    }

    #[test]
    fn contractible_graphs_have_chi_one(g in graph_strategy(9)) {
        let c = is_contractible(&g).unwrap();
        if c.contractible {
            prop_assert_eq!(euler_characteristic(&g).unwrap(), 1);
            prop_assert!(c.collapse_order.is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn memo_agrees_with_plain_recursion(g in graph_strategy(12)) {
        let memo = Recognizer::new(&g);
        let plain = Recognizer::without_memo(&g);
        let full = g.full_set();
        prop_assert_eq!(memo.contractible(&full).unwrap(), plain.contractible(&full).unwrap());
        for d in 0..=3 {
            prop_assert_eq!(memo.sphere(&full, d).unwrap(), plain.sphere(&full, d).unwrap());
        }
        for d in 1..=3 {
            prop_assert_eq!(memo.dgraph(&full, d).unwrap(), plain.dgraph(&full, d).unwrap());
        }
    }
}

fn signed_measure(g: &Graph, seeds: &[u64], weights: &[u32]) -> Measure {
    let n = g.vertex_count();
    let support: Vec<Coloring> = seeds
        .iter()
        .map(|&s| {
            // distinct nonzero values with a random sign pattern
            let values = shuffled_values(n, s);
            Coloring::from_integers(values.iter().map(|&x| if (s >> (x % 64)) & 1 == 1 { x + 1 } else { -(x + 1) }))
        })
        .collect();
    let total: u32 = weights.iter().sum();
    let w = weights.iter().map(|&x| ratio(x as i64, total as i64)).collect();
    Measure::new(g, support, w).unwrap()
}

fn edge_cost<'a>(g: &'a Graph, mu: &'a Measure) -> impl Fn(usize, usize) -> Option<Rational> + 'a {
    move |u, v| {
        if !g.is_adjacent(u, v) {
            return None;
        }
        let mut cost = int(0);
        for (f, w) in mu.support().iter().zip(mu.weights()) {
            let (a, b) = (&f.values()[u], &f.values()[v]);
            if (*a > int(0)) != (*b > int(0)) {
                cost += w;
            }
        }
        Some(cost)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn crofton_matches_path_enumeration(
        g in graph_strategy(6),
        seeds in proptest::collection::vec(any::<u64>(), 1..4),
        raw in proptest::collection::vec(1u32..5, 3),
    ) {
        prop_assume!(g.vertex_count() > 0);
        let mu = signed_measure(&g, &seeds, &raw[..seeds.len()]);
        let cost = edge_cost(&g, &mu);
        for a in 0..g.vertex_count() {
            for b in 0..g.vertex_count() {
                let expected = shortest_by_paths(g.vertex_count(), &cost, a, b);
                prop_assert_eq!(crofton_distance(&g, &mu, a, b).unwrap(), expected);
            }
        }
    }
}
