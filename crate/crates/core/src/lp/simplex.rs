//! Exact revised simplex for the maximin program.
//!
//! `max t` subject to `A w >= t`, `sum w = 1`, `w >= 0` is the value of the
//! matrix game `A`. After shifting every entry to be positive the game value
//! comes from `max sum y` subject to `B^T y <= 1`, `y >= 0`, whose slack basis
//! is feasible, so no first phase is needed. Bland's rule takes over
//! after a run of degenerate pivots, which guarantees termination.

use super::{IndexMatrix, LpError, LpSolution, LpStatus};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub const DEFAULT_PIVOT_BUDGET: u64 = 1_000_000;

pub fn solve_maximin(a: &IndexMatrix) -> Result<LpSolution, LpError> {
    solve_maximin_with_budget(a, DEFAULT_PIVOT_BUDGET)
}

/// Exact maximin solution; runs out of pivots with [`LpError::PivotBudget`].
pub fn solve_maximin_with_budget(a: &IndexMatrix, budget: u64) -> Result<LpSolution, LpError> {
    let (m, n) = (a.rows(), a.cols());
    // Keep the constraint count at min(m, n) by solving the transposed game
    // when there are more columns than sites.
    let (t_star, weights, dual, pivots) = if n <= m {
        let shift = 1 - a.columns().iter().flatten().min().copied().unwrap_or(0);
        let b: Vec<Vec<i64>> = a.columns().iter().map(|c| c.iter().map(|x| x + shift).collect()).collect();
        let game = solve_positive_game(&b, m, budget)?;
        (game.value - Rational::from_integer(shift.into()), game.column_strategy, game.row_strategy, game.pivots)
    } else {
        // columns of -A^T are the sites of A
        let shift = 1 + a.columns().iter().flatten().max().copied().unwrap_or(0);
        let b: Vec<Vec<i64>> = (0..m).map(|i| (0..n).map(|j| shift - a.get(i, j)).collect()).collect();
        let game = solve_positive_game(&b, n, budget)?;
        (Rational::from_integer(shift.into()) - game.value, game.row_strategy, game.column_strategy, game.pivots)
    };
    let status = if t_star.is_positive() { LpStatus::Positive } else { LpStatus::NonpositiveOpt };
    Ok(LpSolution { status, t_star, weights, dual, pivots })
}

struct GameSolution {
    value: Rational,
    /// Maximizing strategy over the columns.
    column_strategy: Vec<Rational>,
    /// Minimizing strategy over the rows.
    row_strategy: Vec<Rational>,
    pivots: u64,
}

/// Consecutive degenerate pivots allowed under the largest-coefficient rule
/// before the solve switches to Bland's rule for good.
const DEGENERATE_STREAK: u32 = 32;

/// Game `max_w min_i (B w)_i` for a positive matrix given as `cols[j][i]`
/// with `rows` rows.
///
/// Fraction-free revised simplex: `binv / det` is the basis inverse and
/// `xb / det` the basic solution. Every stored entry is a minor of the
/// constraint matrix, so the divisions by the previous pivot are exact.
fn solve_positive_game(cols: &[Vec<i64>], rows: usize, budget: u64) -> Result<GameSolution, LpError> {
    let n = cols.len();
    let m = rows;
    // Structural variables y_0..y_m (one per row), slacks s_0..s_n (one per
    // column constraint). Constraint j reads sum_i cols[j][i] y_i + s_j = 1.
    let mut basis: Vec<usize> = (m..m + n).collect();
    let mut is_basic = vec![false; m + n];
    for &v in &basis {
        is_basic[v] = true;
    }
    let mut det = BigInt::one();
    let mut binv: Vec<Vec<BigInt>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut xb = vec![BigInt::one(); n];
    let mut pivots = 0u64;
    let mut bland = false;
    let mut streak = 0u32;

    loop {
        let pi = scaled_duals(&basis, &binv, m);
        let mut entering: Option<(usize, BigInt)> = None;
        for var in 0..m + n {
            if is_basic[var] {
                continue;
            }
            let reduced = if var < m {
                let dot: BigInt = cols.iter().zip(&pi).filter(|(_, p)| !p.is_zero()).map(|(c, p)| p * c[var]).sum();
                &det - dot
            } else {
                -&pi[var - m]
            };
            if !reduced.is_positive() {
                continue;
            }
            if bland {
                entering = Some((var, reduced));
                break;
            }
            if entering.as_ref().is_none_or(|(_, best)| reduced > *best) {
                entering = Some((var, reduced));
            }
        }
        let Some((e, _)) = entering else {
            break;
        };
        if pivots >= budget {
            return Err(LpError::PivotBudget(budget));
        }
        let alpha: Vec<BigInt> = binv
            .iter()
            .map(|row| {
                if e < m {
                    row.iter().zip(cols).filter(|(b, _)| !b.is_zero()).map(|(b, c)| b * c[e]).sum()
                } else {
                    row[e - m].clone()
                }
            })
            .collect();
        let mut leave: Option<usize> = None;
        for r in 0..n {
            if !alpha[r].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(r),
                Some(s) => {
                    // xb[r] / alpha[r] against xb[s] / alpha[s]
                    let lhs = &xb[r] * &alpha[s];
                    let rhs = &xb[s] * &alpha[r];
                    if lhs < rhs || (lhs == rhs && basis[r] < basis[s]) {
                        Some(r)
                    } else {
                        Some(s)
                    }
                }
            };
        }
        let Some(r) = leave else {
            return Err(LpError::Unbounded);
        };
        if xb[r].is_zero() {
            streak += 1;
            if streak > DEGENERATE_STREAK {
                bland = true;
            }
        } else {
            streak = 0;
        }
        let p = alpha[r].clone();
        let (pivot_row, pivot_x) = (binv[r].clone(), xb[r].clone());
        for k in 0..n {
            if k == r {
                continue;
            }
            let a = &alpha[k];
            for (x, q) in binv[k].iter_mut().zip(&pivot_row) {
                *x = (&p * &*x - a * q) / &det;
            }
            xb[k] = (&p * &xb[k] - a * &pivot_x) / &det;
        }
        det = p;
        is_basic[basis[r]] = false;
        is_basic[e] = true;
        basis[r] = e;
        pivots += 1;
    }

    let pi = scaled_duals(&basis, &binv, m);
    let mut y = vec![BigInt::zero(); m];
    for (r, &var) in basis.iter().enumerate() {
        if var < m {
            y[var] = xb[r].clone();
        }
    }
    // B has positive entries, so y = e_i / max_j B_ij is feasible and the optimum is positive
    let total: BigInt = y.iter().sum();
    debug_assert!(total.is_positive());
    let value = Rational::new(det, total.clone());
    let row_strategy = y.into_iter().map(|v| Rational::new(v, total.clone())).collect();
    let column_strategy = pi.into_iter().map(|v| Rational::new(v, total.clone())).collect();
    Ok(GameSolution { value, column_strategy, row_strategy, pivots })
}

/// `det` times the simplex multipliers: the sum of `binv` rows of basic
/// structural variables.
fn scaled_duals(basis: &[usize], binv: &[Vec<BigInt>], m: usize) -> Vec<BigInt> {
    let n = basis.len();
    let mut pi = vec![BigInt::zero(); n];
    for (k, &var) in basis.iter().enumerate() {
        if var >= m {
            continue;
        }
        for (p, b) in pi.iter_mut().zip(&binv[k]) {
            if !b.is_zero() {
                *p += b;
            }
        }
    }
    pi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::verify_certificate;
    use crate::rational::ratio;

    fn solve(rows: &[Vec<i64>]) -> LpSolution {
        let a = IndexMatrix::from_rows(rows).unwrap();
        let sol = solve_maximin(&a).unwrap();
        verify_certificate(&a, &sol).unwrap();
        sol
    }

    #[test]
    fn matching_pennies() {
        let sol = solve(&[vec![1, -1], vec![-1, 1]]);
        assert_eq!(sol.t_star, ratio(0, 1));
        assert_eq!(sol.weights, vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(sol.status, LpStatus::NonpositiveOpt);
    }

    #[test]
    fn single_column() {
        let sol = solve(&[vec![1], vec![0], vec![0], vec![-1]]);
        assert_eq!(sol.t_star, ratio(-1, 1));
        assert_eq!(sol.weights, vec![ratio(1, 1)]);
        assert_eq!(sol.dual.iter().filter(|d| !d.is_zero()).count(), 1);
    }

    #[test]
    fn rectangular_in_both_orientations() {
        // three sites, each column puts all mass on one site
        let sol = solve(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(sol.t_star, ratio(1, 3));
        let wide = solve(&[vec![2, 0, 0, 1], vec![0, 2, 0, 1], vec![0, 0, 2, -3]]);
        assert_eq!(wide.t_star, ratio(2, 3));
        let tall = solve(&[vec![3, -1], vec![-2, 2], vec![0, 1], vec![1, 1]]);
        assert_eq!(tall.t_star, ratio(1, 2));
    }

    #[test]
    fn degenerate_pool_terminates() {
        let mut rows = vec![vec![1i64; 6]; 5];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = -1;
        }
        let sol = solve(&rows);
        assert_eq!(sol.t_star, ratio(1, 1));
        assert_eq!(sol.weights[5], ratio(1, 1));
    }

    #[test]
    fn pivot_budget_is_reported() {
        let a = IndexMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(solve_maximin_with_budget(&a, 0), Err(LpError::PivotBudget(0)));
    }
}
