use crate::error::{Error, Result};
use crate::geom::polytope::VPolytope;
use crate::geom::projection::project_to_hull;
use crate::geom::projection::DEFAULT_MAX_ITER;
use crate::scalar::TOL_GEOM;

/// Euclidean distance from `x` to conv(P).
pub fn point_to_polytope_distance(x: &[f64], p: &VPolytope) -> Result<f64> {
    if x.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: x.len(),
        });
    }
    Ok(project_to_hull(x, &p.rows(), TOL_GEOM, DEFAULT_MAX_ITER)?.distance)
}

/// max over vertices of `from` of the distance to conv(`to`).
///
/// The distance to a convex set is a convex function, so its maximum over a
/// polytope is attained at a vertex.
pub fn directed_hausdorff(from: &[Vec<f64>], to: &[Vec<f64>]) -> Result<f64> {
    let mut best = 0.0f64;
    for v in from {
        best = best.max(project_to_hull(v, to, TOL_GEOM, DEFAULT_MAX_ITER)?.distance);
    }
    Ok(best)
}

/// Hausdorff distance between two convex polytopes.
pub fn hausdorff(p: &VPolytope, q: &VPolytope) -> Result<f64> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    let (a, b) = (p.rows(), q.rows());
    Ok(directed_hausdorff(&a, &b)?.max(directed_hausdorff(&b, &a)?))
}

/// Hausdorff distance between two finite point sets (not their hulls).
pub fn hausdorff_finite(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    fn directed(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
        a.iter()
            .map(|x| {
                b.iter()
                    .map(|y| x.iter().zip(y).map(|(s, t)| (s - t) * (s - t)).sum::<f64>())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
            .sqrt()
    }
    directed(a, b).max(directed(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(s: f64) -> VPolytope {
        VPolytope::from_f64_rows(&[vec![0.0, 0.0], vec![s, 0.0], vec![s, s], vec![0.0, s]]).unwrap()
    }

    #[test]
    fn nested_squares() {
        let d = hausdorff(&square(1.0), &square(2.0)).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(hausdorff(&square(1.0), &square(1.0)).unwrap(), 0.0);
    }

    #[test]
    fn point_distance() {
        assert!((point_to_polytope_distance(&[2.0, 0.0], &square(1.0)).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(point_to_polytope_distance(&[0.5, 0.5], &square(1.0)).unwrap(), 0.0);
    }

    #[test]
    fn finite_sets() {
        let a = vec![vec![0.0, 0.0], vec![1.0, 0.0]];
        let b = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, 0.3]];
        assert!((hausdorff_finite(&a, &b) - (0.25f64 + 0.09).sqrt()).abs() < 1e-15);
    }
}
