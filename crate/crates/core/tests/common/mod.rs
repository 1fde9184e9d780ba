//! Brute-force oracles shared by the integration tests. None of them calls
//! into the library beyond graph construction and accessors.

#![allow(dead_code)]

use graphcurv::graph::Graph;
use graphcurv::rational::Rational;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && g.is_adjacent(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Fixed corpus of connected graphs with at most `max_n` vertices.
pub fn connected_corpus(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(n, p, &mut rng);
        if is_connected(&g) {
            out.push(g);
        }
    }
    out
}

/// Euler characteristic by testing every vertex subset for completeness.
pub fn chi_by_subsets(g: &Graph) -> i64 {
    let n = g.vertex_count();
    assert!(n <= 20);
    let mut chi = 0;
    for mask in 1u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let complete = vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.is_adjacent(u, v)));
        if complete {
            chi += if vs.len() % 2 == 1 { 1 } else { -1 };
        }
    }
    chi
}

/// Solves the square system `m x = b` fraction-free. Returns `(x_num, den)`
/// with `den > 0`, or `None` when singular.
fn solve_square(mut m: Vec<Vec<i128>>, mut b: Vec<i128>) -> Option<(Vec<i128>, i128)> {
    let k = m.len();
    let mut prev = 1i128;
    for col in 0..k {
        let pivot = (col..k).find(|&r| m[r][col] != 0)?;
        m.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..k {
            for c in col + 1..k {
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
            }
            b[r] = (m[col][col] * b[r] - m[r][col] * b[col]) / prev;
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    // back substitution over a common denominator
    let det = m[k - 1][k - 1];
    let mut x = vec![0i128; k];
    for r in (0..k).rev() {
        let mut acc = b[r] * det;
        for c in r + 1..k {
            acc -= m[r][c] * x[c];
        }
        // acc = m[r][r] * x[r] exactly in units of 1/det
        assert_eq!(acc % m[r][r], 0, "inexact back substitution");
        x[r] = acc / m[r][r];
    }
    // x / det solves the system
    if det < 0 {
        Some((x.into_iter().map(|v| -v).collect(), -det))
    } else {
        Some((x, det))
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `max t` s.t. `A w >= t`, `sum w = 1`, `w >= 0` by enumerating basic
/// feasible points: a support `S` of `w` and `|S|` rows held at equality.
pub fn maximin_by_vertices(rows: &[Vec<i64>]) -> Rational {
    let m = rows.len();
    let n = rows[0].len();
    let mut best: Option<Rational> = None;
    for k in 1..=m.min(n) {
        let supports = subsets(n, k);
        for rs in subsets(m, k) {
            for s in &supports {
                // unknowns w_S and t; equations A_RS w_S - t = 0 and sum w_S = 1
                let mut mat = Vec::with_capacity(k + 1);
                let mut rhs = Vec::with_capacity(k + 1);
                for &i in &rs {
                    let mut row: Vec<i128> = s.iter().map(|&j| rows[i][j] as i128).collect();
                    row.push(-1);
                    mat.push(row);
                    rhs.push(0);
                }
                let mut ones = vec![1i128; k];
                ones.push(0);
                mat.push(ones);
                rhs.push(1);
                let Some((x, den)) = solve_square(mat, rhs) else {
                    continue;
                };
                if x[..k].iter().any(|&w| w < 0) {
                    continue;
                }
                let t = x[k];
                let feasible = rows.iter().all(|row| s.iter().zip(&x).map(|(&j, &w)| row[j] as i128 * w).sum::<i128>() >= t);
                if !feasible {
                    continue;
                }
                let value = Rational::new(BigInt::from(t), BigInt::from(den));
                if best.as_ref().is_none_or(|b| value > *b) {
                    best = Some(value);
                }
            }
        }
    }
    best.expect("a pure column is always a basic feasible point")
}

/// Shortest path by enumerating every simple path; `None` when disconnected.
pub fn shortest_by_paths(n: usize, weight: &dyn Fn(usize, usize) -> Option<Rational>, a: usize, b: usize) -> Option<Rational> {
    fn walk(
        u: usize,
        b: usize,
        n: usize,
        weight: &dyn Fn(usize, usize) -> Option<Rational>,
        on_path: &mut Vec<bool>,
        acc: Rational,
        best: &mut Option<Rational>,
    ) {
        if u == b {
            if best.as_ref().is_none_or(|x| acc < *x) {
                *best = Some(acc);
            }
            return;
        }
        for v in 0..n {
            if on_path[v] {
                continue;
            }
            if let Some(w) = weight(u, v) {
                on_path[v] = true;
                walk(v, b, n, weight, on_path, &acc + w, best);
                on_path[v] = false;
            }
        }
    }
    let mut on_path = vec![false; n];
    on_path[a] = true;
    let mut best = None;
    walk(a, b, n, weight, &mut on_path, Rational::from_integer(0.into()), &mut best);
    best
}
