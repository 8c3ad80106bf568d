//! Euclidean projection onto the convex hull of finitely many points.
//!
//! Wolfe's minimum-norm-point method on the translated points `v_i - x`.
//! Each iterate `y` is a point of the hull, so `|y|` is an upper bound on the
//! distance, and `min_i <y, v_i - x> / |y|` is a lower bound (a separating
//! hyperplane). The loop stops once the two bounds are within tolerance.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Projection {
    pub distance: f64,
    /// Nearest point of the hull.
    pub nearest: Vec<f64>,
    /// Certified gap between the upper and lower distance bounds.
    pub gap: f64,
    pub iterations: usize,
}

pub const DEFAULT_MAX_ITER: usize = 10_000;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves the affine minimum-norm problem on the points indexed by `set`:
/// weights summing to one minimizing |sum w_i q_i|. None if singular.
fn affine_min_norm(q: &[Vec<f64>], set: &[usize]) -> Option<Vec<f64>> {
    let s = set.len();
    let n = s + 1;
    let mut a = vec![vec![0.0; n + 1]; n];
    for i in 0..s {
        for j in 0..s {
            a[i][j] = dot(&q[set[i]], &q[set[j]]);
        }
        a[i][s] = 1.0;
        a[s][i] = 1.0;
    }
    a[s][n] = 1.0;
    // Gaussian elimination with partial pivoting
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                if f != 0.0 {
                    for c in col..=n {
                        a[r][c] -= f * a[col][c];
                    }
                }
            }
        }
    }
    let w: Vec<f64> = (0..s).map(|i| a[i][n] / a[i][i]).collect();
    if w.iter().all(|v| v.is_finite()) {
        Some(w)
    } else {
        None
    }
}

fn combine(q: &[Vec<f64>], set: &[usize], w: &[f64], dim: usize) -> Vec<f64> {
    let mut y = vec![0.0; dim];
    for (k, &i) in set.iter().enumerate() {
        for d in 0..dim {
            y[d] += w[k] * q[i][d];
        }
    }
    y
}

/// Distance from `x` to conv(`points`) with a certified stopping gap `tol`.
pub fn project_to_hull(x: &[f64], points: &[Vec<f64>], tol: f64, max_iter: usize) -> Result<Projection> {
    if points.is_empty() {
        return Err(Error::Empty);
    }
    let dim = x.len();
    let q: Vec<Vec<f64>> = points.iter().map(|p| p.iter().zip(x).map(|(a, b)| a - b).collect()).collect();
    let scale = q.iter().map(|v| dot(v, v)).fold(0.0, f64::max).max(1e-300);

    let start = (0..q.len()).min_by(|&a, &b| dot(&q[a], &q[a]).total_cmp(&dot(&q[b], &q[b]))).unwrap();
    let mut set = vec![start];
    let mut w = vec![1.0];
    let mut y = q[start].clone();
    let mut gap = f64::INFINITY;

    for iter in 0..max_iter {
        let yy = dot(&y, &y);
        let norm = yy.sqrt();
        let (j, mn) = (0..q.len()).map(|i| (i, dot(&y, &q[i]))).min_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
        let lower = if norm > 0.0 { (mn / norm).max(0.0) } else { 0.0 };
        gap = norm - lower;
        if gap <= tol || norm <= tol || yy - mn <= 1e-15 * scale {
            let nearest = y.iter().zip(x).map(|(a, b)| a + b).collect();
            let distance = if norm <= tol { 0.0 } else { norm };
            return Ok(Projection {
                distance,
                nearest,
                gap: gap.max(0.0),
                iterations: iter,
            });
        }
        if set.contains(&j) {
            // Numerical stall: the best vertex is already in the corral.
            break;
        }
        set.push(j);
        w.push(0.0);
        // Minor cycle.
        loop {
            let Some(alpha) = affine_min_norm(&q, &set) else {
                // Affinely dependent corral; drop the newest point's predecessor with the smallest weight.
                let (k, _) = w.iter().enumerate().take(set.len() - 1).min_by(|a, b| f64::total_cmp(a.1, b.1)).unwrap();
                set.remove(k);
                w.remove(k);
                continue;
            };
            if alpha.iter().all(|&a| a > 1e-14) {
                w = alpha;
                break;
            }
            let mut theta = 1.0f64;
            for k in 0..set.len() {
                if alpha[k] <= 1e-14 {
                    let denom = w[k] - alpha[k];
                    if denom > 0.0 {
                        theta = theta.min(w[k] / denom);
                    }
                }
            }
            for k in 0..set.len() {
                w[k] += theta * (alpha[k] - w[k]);
            }
            let mut k = 0;
            while k < set.len() {
                if w[k] <= 1e-14 {
                    set.remove(k);
                    w.remove(k);
                } else {
                    k += 1;
                }
            }
            let total: f64 = w.iter().sum();
            for v in w.iter_mut() {
                *v /= total;
            }
            if set.len() == 1 {
                w = vec![1.0];
                break;
            }
        }
        y = combine(&q, &set, &w, dim);
    }
    Err(Error::NoConvergence { iterations: max_iter, gap })
}

/// Distance from a point to the convex hull, with the default iteration budget.
pub fn distance_to_hull(x: &[f64], points: &[Vec<f64>], tol: f64) -> Result<f64> {
    project_to_hull(x, points, tol, DEFAULT_MAX_ITER).map(|p| p.distance)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Vec<Vec<f64>> {
        vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]
    }

    #[test]
    fn outside_square() {
        let d = distance_to_hull(&[2.0, 0.0], &square(), 1e-12).unwrap();
        assert!((d - 1.0).abs() < 1e-12);
        let d = distance_to_hull(&[2.0, 2.0], &square(), 1e-12).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
        let d = distance_to_hull(&[0.5, -3.0], &square(), 1e-12).unwrap();
        assert!((d - 3.0).abs() < 1e-12);
    }

    #[test]
    fn inside_is_zero() {
        assert_eq!(distance_to_hull(&[0.3, 0.6], &square(), 1e-9).unwrap(), 0.0);
        assert_eq!(distance_to_hull(&[1.0, 0.5], &square(), 1e-9).unwrap(), 0.0);
    }

    #[test]
    fn zero_budget_fails_loudly() {
        let r = project_to_hull(&[2.0, 0.3], &square(), 1e-12, 0);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn three_d_face() {
        let tet = vec![vec![0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]];
        let d = distance_to_hull(&[1.0, 1.0, 1.0], &tet, 1e-12).unwrap();
        // Distance to the plane x+y+z=1.
        assert!((d - 2.0 / 3f64.sqrt()).abs() < 1e-10);
    }
}
