//! Exact phase-one simplex over the rationals, used for convex-hull membership.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Is `x` a convex combination of `points`? Exact; Bland's rule guarantees termination.
pub fn in_convex_hull_exact(points: &[Vec<BigRational>], x: &[BigRational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let rows = x.len() + 1;
    let k = points.len();
    // Columns: k lambdas, then `rows` artificials, then the right-hand side.
    let cols = k + rows + 1;
    let mut t: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); cols]; rows];
    for r in 0..rows {
        let rhs = if r < x.len() { x[r].clone() } else { BigRational::one() };
        let flip = rhs.is_negative();
        for (c, p) in points.iter().enumerate() {
            let a = if r < x.len() { p[r].clone() } else { BigRational::one() };
            t[r][c] = if flip { -a } else { a };
        }
        t[r][k + r] = BigRational::one();
        t[r][cols - 1] = if flip { -rhs } else { rhs };
    }
    let mut basis: Vec<usize> = (k..k + rows).collect();
    // Reduced costs of the phase-one objective (sum of artificials), expressed in
    // nonbasic columns: cost_j = -sum_r t[r][j] for original columns.
    loop {
        let mut entering = None;
        for j in 0..k + rows {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = if j >= k { BigRational::one() } else { BigRational::zero() };
            for (r, &b) in basis.iter().enumerate() {
                if b >= k {
                    reduced -= &t[r][j];
                }
            }
            if reduced.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][j].is_positive() {
                let ratio = &t[r][cols - 1] / &t[r][j];
                let better = match &leave {
                    None => true,
                    Some((lr, lv)) => ratio < *lv || (ratio == *lv && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded cannot happen in phase one; treat as infeasible.
            return false;
        };
        let piv = t[pr][j].clone();
        for v in t[pr].iter_mut() {
            *v /= &piv;
        }
        for r in 0..rows {
            if r != pr && !t[r][j].is_zero() {
                let f = t[r][j].clone();
                for c in 0..cols {
                    let delta = &f * &t[pr][c];
                    t[r][c] -= delta;
                }
            }
        }
        basis[pr] = j;
    }
    basis.iter().enumerate().filter(|(_, &b)| b >= k).all(|(r, _)| t[r][cols - 1].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn square_membership() {
        let sq: Vec<Vec<BigRational>> = [(0, 0), (1, 0), (1, 1), (0, 1)].iter().map(|&(a, b)| vec![q(a, 1), q(b, 1)]).collect();
        assert!(in_convex_hull_exact(&sq, &[q(1, 2), q(1, 2)]));
        assert!(in_convex_hull_exact(&sq, &[q(1, 1), q(1, 3)]));
        assert!(!in_convex_hull_exact(&sq, &[q(-1, 1000), q(1, 2)]));
        assert!(!in_convex_hull_exact(&sq, &[q(2, 1), q(1, 2)]));
    }

    #[test]
    fn segment_membership() {
        let seg = vec![vec![q(0, 1), q(0, 1)], vec![q(2, 1), q(2, 1)]];
        assert!(in_convex_hull_exact(&seg, &[q(1, 1), q(1, 1)]));
        assert!(!in_convex_hull_exact(&seg, &[q(1, 1), q(1, 1) + q(1, 10_000_000)]));
    }
}
