use super::{IndexMatrix, LpSolution, LpStatus};
use crate::rational::{format_rational, Rational};
use num_traits::{One, Signed, Zero};

/// First condition a claimed maximin solution fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("weights have length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("dual has length {got}, expected {expected}")]
    DualLength { got: usize, expected: usize },
    #[error("negative weight at column {0}")]
    NegativeWeight(usize),
    #[error("primal value mismatch: min(Aw) = {found}, t_star = {claimed}")]
    PrimalValueMismatch { found: String, claimed: String },
    #[error("weights sum to {0}, not 1")]
    WeightSum(String),
    #[error("negative dual at site {0}")]
    NegativeDual(usize),
    #[error("dual sums to {0}, not 1")]
    DualSum(String),
    #[error("dual infeasible: column {column} gives {value} > t_star")]
    DualInfeasible { column: usize, value: String },
    #[error("duality gap: best column against the dual gives {0}")]
    DualityGap(String),
    #[error("status does not match the sign of t_star")]
    Status,
}

/// Checks a solution with exact arithmetic, independent of how it was found.
///
/// Primal feasibility proves `t_star` is attained, the dual distribution on
/// sites proves no measure on the pool does better.
pub fn verify_certificate(a: &IndexMatrix, sol: &LpSolution) -> Result<(), CertificateError> {
    let (m, n) = (a.rows(), a.cols());
    if sol.weights.len() != n {
        return Err(CertificateError::WeightLength { got: sol.weights.len(), expected: n });
    }
    if sol.dual.len() != m {
        return Err(CertificateError::DualLength { got: sol.dual.len(), expected: m });
    }
    if let Some(j) = sol.weights.iter().position(|w| w.is_negative()) {
        return Err(CertificateError::NegativeWeight(j));
    }
    let curvature = (0..m).map(|i| {
        sol.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(j, w)| w * Rational::from_integer(a.get(i, j).into()))
            .sum::<Rational>()
    });
    let found = curvature.min().unwrap_or_else(Rational::zero);
    if found != sol.t_star {
        return Err(CertificateError::PrimalValueMismatch {
            found: format_rational(&found),
            claimed: format_rational(&sol.t_star),
        });
    }
    let total: Rational = sol.weights.iter().sum();
    if !total.is_one() {
        return Err(CertificateError::WeightSum(format_rational(&total)));
    }
    if let Some(i) = sol.dual.iter().position(|y| y.is_negative()) {
        return Err(CertificateError::NegativeDual(i));
    }
    let dual_total: Rational = sol.dual.iter().sum();
    if !dual_total.is_one() {
        return Err(CertificateError::DualSum(format_rational(&dual_total)));
    }
    let mut best: Option<Rational> = None;
    for j in 0..n {
        let value: Rational = sol
            .dual
            .iter()
            .enumerate()
            .filter(|(_, y)| !y.is_zero())
            .map(|(i, y)| y * Rational::from_integer(a.get(i, j).into()))
            .sum();
        if value > sol.t_star {
            return Err(CertificateError::DualInfeasible { column: j, value: format_rational(&value) });
        }
        if best.as_ref().is_none_or(|b| value > *b) {
            best = Some(value);
        }
    }
    let best = best.unwrap_or_else(Rational::zero);
    if best != sol.t_star {
        return Err(CertificateError::DualityGap(format_rational(&best)));
    }
    let positive = sol.t_star.is_positive();
    if positive != (sol.status == LpStatus::Positive) {
        return Err(CertificateError::Status);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::solve_maximin;
    use crate::rational::ratio;

    fn pennies() -> (IndexMatrix, LpSolution) {
        let a = IndexMatrix::from_rows(&[vec![1, -1], vec![-1, 1]]).unwrap();
        let sol = solve_maximin(&a).unwrap();
        (a, sol)
    }

    #[test]
    fn accepts_solver_output() {
        let (a, sol) = pennies();
        assert_eq!(verify_certificate(&a, &sol), Ok(()));
    }

    #[test]
    fn perturbed_t_star_is_a_primal_mismatch() {
        let (a, mut sol) = pennies();
        sol.t_star = ratio(1, 10);
        assert!(matches!(verify_certificate(&a, &sol), Err(CertificateError::PrimalValueMismatch { .. })));
    }

    #[test]
    fn each_condition_is_named() {
        let (a, sol) = pennies();
        let mut bad = sol.clone();
        bad.weights = vec![ratio(3, 2), ratio(-1, 2)];
        assert_eq!(verify_certificate(&a, &bad), Err(CertificateError::NegativeWeight(1)));

        let mut bad = sol.clone();
        bad.weights = vec![ratio(1, 1), ratio(1, 1)];
        bad.t_star = ratio(0, 1);
        assert_eq!(verify_certificate(&a, &bad), Err(CertificateError::WeightSum("2/1".into())));

        let mut bad = sol.clone();
        bad.dual = vec![ratio(1, 1), ratio(0, 1)];
        assert!(matches!(verify_certificate(&a, &bad), Err(CertificateError::DualInfeasible { column: 0, .. })));

        let mut bad = sol.clone();
        bad.dual = vec![ratio(1, 2), ratio(1, 4)];
        assert_eq!(verify_certificate(&a, &bad), Err(CertificateError::DualSum("3/4".into())));

        let mut bad = sol;
        bad.status = LpStatus::Positive;
        assert_eq!(verify_certificate(&a, &bad), Err(CertificateError::Status));
    }

    #[test]
    fn loose_dual_is_rejected() {
        let a = IndexMatrix::from_rows(&[vec![1, 1], vec![1, 3]]).unwrap();
        let sol = LpSolution {
            status: LpStatus::Positive,
            t_star: ratio(1, 1),
            weights: vec![ratio(1, 1), ratio(0, 1)],
            dual: vec![ratio(1, 2), ratio(1, 2)],
            pivots: 0,
        };
        assert!(matches!(verify_certificate(&a, &sol), Err(CertificateError::DualInfeasible { column: 1, .. })));
        let mut tight = sol;
        tight.dual = vec![ratio(1, 1), ratio(0, 1)];
        assert_eq!(verify_certificate(&a, &tight), Ok(()));
    }
}
