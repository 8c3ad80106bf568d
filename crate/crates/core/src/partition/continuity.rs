use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::hausdorff::{hausdorff, hausdorff_finite};
use crate::geom::metric::{diameter, Metric};
use crate::geom::point::PointSet;
use crate::geom::polytope::VPolytope;
use crate::partition::finite::{f_m_finite, FiniteOptions, FmOutcome};
use crate::scalar::TOL_GEOM;

/// Comparison of `f_m` on two nearby sets against the bound `|f1 - f2| <= 2ε`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuityCheck {
    /// Hausdorff distance between the two finite sets.
    pub epsilon: f64,
    /// Hausdorff distance between their convex hulls (never larger than `epsilon`).
    pub hull_epsilon: f64,
    pub m: usize,
    pub f1: f64,
    pub f2: f64,
    pub bound_ok: bool,
}

impl ContinuityCheck {
    pub fn delta(&self) -> f64 {
        (self.f1 - self.f2).abs()
    }
}

fn exact_theta(x: &PointSet, m: usize, opts: &FiniteOptions) -> Result<f64> {
    match f_m_finite(x, m, opts)? {
        FmOutcome::Exact(r) => Ok(r.theta),
        FmOutcome::Bracket { theta_lo, theta_hi, .. } => Err(Error::NoConvergence {
            iterations: opts.budget as usize,
            gap: theta_hi - theta_lo,
        }),
    }
}

/// Evaluates `f_m` on both sets and the additive `2ε` bound.
///
/// ε is measured between the point sets themselves. For sets with diameter at
/// least 2 the parts can be matched point by point, and every part diameter
/// moves by at most 2ε, which gives the bound. Measuring ε between hulls
/// would be too weak for finite sets with interior points.
pub fn check_continuity(x1: &PointSet, x2: &PointSet, m: usize) -> Result<ContinuityCheck> {
    if x1.dim() != x2.dim() {
        return Err(Error::DimensionMismatch {
            expected: x1.dim(),
            found: x2.dim(),
        });
    }
    for (name, x) in [("X1", x1), ("X2", x2)] {
        let d = diameter(x, Metric::Euclidean).value;
        if d < 2.0 - TOL_GEOM {
            return Err(Error::Hypothesis(format!("d({name}) = {d} < 2")));
        }
    }
    let (r1, r2) = (x1.to_f64_rows(), x2.to_f64_rows());
    let epsilon = hausdorff_finite(&r1, &r2);
    let hull_epsilon = hausdorff(&VPolytope::from_points(x1), &VPolytope::from_points(x2))?;
    let opts = FiniteOptions::default();
    let f1 = exact_theta(x1, m, &opts)?;
    let f2 = exact_theta(x2, m, &opts)?;
    Ok(ContinuityCheck {
        epsilon,
        hull_epsilon,
        m,
        f1,
        f2,
        bound_ok: (f1 - f2).abs() <= 2.0 * epsilon + TOL_GEOM,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn big_square() -> PointSet {
        PointSet::from_i64_rows(&[vec![0, 0], vec![3, 0], vec![3, 3], vec![0, 3], vec![1, 2]]).unwrap()
    }

    #[test]
    fn identical_sets() {
        let c = check_continuity(&big_square(), &big_square(), 2).unwrap();
        assert_eq!(c.epsilon, 0.0);
        assert_eq!(c.delta(), 0.0);
        assert!(c.bound_ok);
    }

    #[test]
    fn translation_keeps_f() {
        let x2 = big_square().translate(&[Scalar::ratio(1, 2), Scalar::int(0)]).unwrap();
        let c = check_continuity(&big_square(), &x2, 3).unwrap();
        assert!((c.epsilon - 0.5).abs() < 1e-12);
        assert!(c.delta() < 1e-12);
        assert!(c.bound_ok);
    }

    #[test]
    fn small_diameter_rejected() {
        let x = PointSet::from_i64_rows(&[vec![0, 0], vec![1, 0]]).unwrap();
        assert!(matches!(check_continuity(&x, &x, 2), Err(Error::Hypothesis(_))));
    }
}
