use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::hausdorff::hausdorff;
use crate::geom::point::PointSet;
use crate::geom::polytope::{hull_vertex_filter, VPolytope};
use crate::net::lattice::{hull_2d_int, LatticePolytope};
use crate::net::spec::NetSpec;
use crate::scalar::{Scalar, TOL_GEOM};

#[derive(Clone, Debug, Serialize)]
pub struct SnapResult {
    pub polytope: LatticePolytope,
    /// Number of boundary samples snapped.
    pub samples: usize,
    /// Largest distance between consecutive boundary samples (0 when only vertices are used).
    pub sample_spacing: f64,
    pub hausdorff: f64,
    pub bound: f64,
    pub within_bound: bool,
}

/// Nearest integer to `q`, halves rounded toward zero.
fn round_toward_zero_on_tie(q: f64) -> i64 {
    let f = q.floor();
    let frac = q - f;
    let f = f as i64;
    if frac < 0.5 {
        f
    } else if frac > 0.5 {
        f + 1
    } else if f >= 0 {
        f
    } else {
        f + 1
    }
}

fn round_exact(q: &BigRational) -> i64 {
    let f = q.floor();
    let frac = q - &f;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let f = f.to_integer().to_i64().unwrap_or(i64::MAX);
    match frac.cmp(&half) {
        std::cmp::Ordering::Less => f,
        std::cmp::Ordering::Greater => f + 1,
        std::cmp::Ordering::Equal if q.is_negative() => f + 1,
        std::cmp::Ordering::Equal => f,
    }
}

/// Nearest lattice point of `κ·ℤⁿ`; ties go toward the origin coordinatewise,
/// which picks the nearest point of smallest norm.
pub fn nearest_lattice_point(x: &[Scalar], kappa: &Scalar) -> Vec<i64> {
    x.iter()
        .map(|c| match (c.as_exact(), kappa.as_exact()) {
            (Some(a), Some(k)) => round_exact(&(a / k)),
            _ => round_toward_zero_on_tie(c.to_f64() / kappa.to_f64()),
        })
        .collect()
}

/// Largest gap between consecutive boundary points of a planar polygon.
fn boundary_spacing(cyc: &[Vec<f64>]) -> f64 {
    let n = cyc.len();
    (0..n)
        .map(|i| {
            let (a, b) = (&cyc[i], &cyc[(i + 1) % n]);
            ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt()
        })
        .fold(0.0, f64::max)
}

/// Snaps the points representing `k` (its vertices, or boundary samples of
/// a smooth body) onto the lattice of `spec`, takes the hull, and checks
/// `δ^H(K, P) <= √n·κ`.
///
/// Each point moves by at most `√n·κ/2`, and moving every generator of a
/// hull by at most `t` moves the hull by at most `t` in Hausdorff distance,
/// so the bound holds with room to spare. Lattice polytopes snap to themselves.
pub fn snap(k: &VPolytope, spec: &NetSpec) -> Result<SnapResult> {
    if k.dim() != spec.n {
        return Err(Error::DimensionMismatch {
            expected: spec.n,
            found: k.dim(),
        });
    }
    let kappa = &spec.kappa;
    let pts: Vec<Vec<i64>> = k.vertices().points().iter().map(|p| nearest_lattice_point(&p.coords, kappa)).collect();
    let (lattice, sample_spacing): (Vec<Vec<i64>>, f64) = if k.dim() == 2 {
        let spacing = if k.len() >= 3 {
            boundary_spacing(&crate::geom::polytope::convex_hull_2d(k.vertices())?.polytope.rows())
        } else {
            0.0
        };
        let arr: Vec<[i64; 2]> = pts.iter().map(|v| [v[0], v[1]]).collect();
        (hull_2d_int(&arr).iter().map(|v| v.to_vec()).collect(), spacing)
    } else {
        let ps = PointSet::from_i64_rows(&pts)?;
        let h = hull_vertex_filter(&ps, TOL_GEOM);
        let verts = h
            .vertices()
            .points()
            .iter()
            .map(|p| p.coords.iter().map(|c| c.to_f64().round() as i64).collect())
            .collect();
        (verts, 0.0)
    };
    let polytope = LatticePolytope::new(lattice);
    let p = polytope.to_vpolytope(kappa)?;
    let d = hausdorff(k, &p)?;
    let bound = spec.beta();
    Ok(SnapResult {
        polytope,
        samples: pts.len(),
        sample_spacing,
        hausdorff: d,
        bound,
        within_bound: d <= bound + TOL_GEOM,
    })
}
