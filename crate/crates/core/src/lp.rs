//! Exact simplex over rationals for `max c·x  s.t.  A x <= b, x >= 0` with
//! `b >= 0`, so the slack basis is feasible from the start.
//!
//! Dictionary form: only the `m x n` block of nonbasic coefficients is
//! stored, which keeps pivots cheap when there are many more constraints
//! than variables (the dual-norm programs have thousands of rows and at
//! most a dozen columns). Bland's rule guarantees termination.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    /// Optimal primal point.
    pub point: Vec<Rational>,
    /// Optimal dual multipliers, one per constraint row: `y >= 0`,
    /// `A^T y >= c` and `b·y = value`.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> Result<LpSolution> {
    let n = c.len();
    let m = a.len();
    if b.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: b.len() });
    }
    if let Some(row) = a.iter().find(|row| row.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: row.len() });
    }
    if b.iter().any(|v| v.is_negative()) {
        return Err(Error::InvalidParameter("right-hand side must be nonnegative".into()));
    }

    // labels 0..n are structural, n..n+m are slacks
    let mut basic: Vec<usize> = (n..n + m).collect();
    let mut nonbasic: Vec<usize> = (0..n).collect();
    let mut coef: Vec<Vec<Rational>> = a.to_vec();
    let mut rhs: Vec<Rational> = b.to_vec();
    let mut obj: Vec<Rational> = c.to_vec();
    let mut value = Rational::zero();
    let mut pivots = 0;

    loop {
        let entering = (0..n)
            .filter(|&j| obj[j].is_positive())
            .min_by_key(|&j| nonbasic[j]);
        let Some(col) = entering else { break };

        let mut leaving: Option<(usize, Rational)> = None;
        for (i, row) in coef.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let bound = &rhs[i] / &row[col];
            let better = match &leaving {
                None => true,
                Some((r, best)) => bound < *best || (bound == *best && basic[i] < basic[*r]),
            };
            if better {
                leaving = Some((i, bound));
            }
        }
        let Some((row, _)) = leaving else {
            return Err(Error::Unbounded);
        };

        let pivot = coef[row][col].clone();
        let mut pivot_row: Vec<Rational> = coef[row].iter().map(|v| v / &pivot).collect();
        pivot_row[col] = Rational::from_integer(1.into()) / &pivot;
        let pivot_rhs = &rhs[row] / &pivot;

        for i in 0..m {
            if i == row {
                continue;
            }
            let factor = coef[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for k in 0..n {
                if k == col {
                    coef[i][k] = -(&factor * &pivot_row[col]);
                } else {
                    let delta = &factor * &pivot_row[k];
                    coef[i][k] -= delta;
                }
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = obj[col].clone();
        for k in 0..n {
            if k == col {
                obj[k] = -(&factor * &pivot_row[col]);
            } else {
                let delta = &factor * &pivot_row[k];
                obj[k] -= delta;
            }
        }
        value += &factor * &pivot_rhs;
        coef[row] = pivot_row;
        rhs[row] = pivot_rhs;
        std::mem::swap(&mut basic[row], &mut nonbasic[col]);
        pivots += 1;
    }

    let mut point = vec![Rational::zero(); n];
    for (i, &label) in basic.iter().enumerate() {
        if label < n {
            point[label] = rhs[i].clone();
        }
    }
    let mut duals = vec![Rational::zero(); m];
    for (j, &label) in nonbasic.iter().enumerate() {
        if label >= n {
            duals[label - n] = -obj[j].clone();
        }
    }
    Ok(LpSolution {
        value,
        point,
        duals,
        pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn rows(raw: &[&[i64]]) -> Vec<Vec<Rational>> {
        raw.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    fn check_certificate(c: &[Rational], a: &[Vec<Rational>], b: &[Rational], sol: &LpSolution) {
        let primal: Rational = c.iter().zip(&sol.point).map(|(ci, xi)| ci * xi).sum();
        assert_eq!(primal, sol.value);
        for (row, bi) in a.iter().zip(b) {
            let lhs: Rational = row.iter().zip(&sol.point).map(|(r, x)| r * x).sum();
            assert!(lhs <= *bi);
        }
        assert!(sol.duals.iter().all(|y| !y.is_negative()));
        for (j, cj) in c.iter().enumerate() {
            let col: Rational = a.iter().zip(&sol.duals).map(|(row, y)| &row[j] * y).sum();
            assert!(col >= *cj);
        }
        let dual: Rational = b.iter().zip(&sol.duals).map(|(bi, y)| bi * y).sum();
        assert_eq!(dual, sol.value);
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3 -> 11 at (3, 1)
        let c = [int(3), int(2)];
        let a = rows(&[&[1, 1], &[1, 3], &[1, 0]]);
        let b = [int(4), int(6), int(3)];
        let sol = maximize(&c, &a, &b).unwrap();
        assert_eq!(sol.value, int(11));
        assert_eq!(sol.point, vec![int(3), int(1)]);
        check_certificate(&c, &a, &b, &sol);
    }

    #[test]
    fn fractional_optimum() {
        // max x + y, 2x + y <= 1, x + 2y <= 1 -> 2/3
        let c = [int(1), int(1)];
        let a = rows(&[&[2, 1], &[1, 2]]);
        let b = [int(1), int(1)];
        let sol = maximize(&c, &a, &b).unwrap();
        assert_eq!(sol.value, ratio(2, 3));
        check_certificate(&c, &a, &b, &sol);
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Degenerate vertex at the origin; Bland's rule must not cycle.
        let c = [int(10), int(-57), int(-9), int(-24)];
        let a = vec![
            vec![ratio(1, 2), ratio(-11, 2), ratio(-5, 2), int(9)],
            vec![ratio(1, 2), ratio(-3, 2), ratio(-1, 2), int(1)],
            vec![int(1), int(0), int(0), int(0)],
        ];
        let b = [int(0), int(0), int(1)];
        let sol = maximize(&c, &a, &b).unwrap();
        assert_eq!(sol.value, int(1));
        check_certificate(&c, &a, &b, &sol);
    }

    #[test]
    fn unbounded_and_invalid() {
        let c = [int(1), int(0)];
        let a = rows(&[&[0, 1]]);
        assert_eq!(maximize(&c, &a, &[int(1)]), Err(Error::Unbounded));
        assert!(maximize(&c, &a, &[int(-1)]).is_err());
        assert!(maximize(&c, &rows(&[&[1]]), &[int(1)]).is_err());
    }
}
