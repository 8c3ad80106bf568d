use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::polytope::{width, VPolytope};

/// Discretized Reuleaux polygon: `samples` points on each of `k` arcs.
#[derive(Clone, Debug)]
pub struct ReuleauxBody {
    pub arc_centers: Vec<[f64; 2]>,
    pub width: f64,
    pub samples: usize,
    /// Largest gap between the true body and the polygon along any support
    /// direction; every sampled width lies in `[width - sagitta, width]`.
    pub sagitta: f64,
    pub polygon: VPolytope,
}

/// Reuleaux polygon of width `w` built on the regular `k`-gon of diameter `w`.
pub fn reuleaux_polygon(k: usize, w: f64, samples: usize) -> Result<ReuleauxBody> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("Reuleaux polygons need odd k >= 3, got {k}")));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument("at least 2 samples per arc".into()));
    }
    if !(w > 0.0) {
        return Err(Error::InvalidArgument("width must be positive".into()));
    }
    let kf = k as f64;
    let circ = w / (2.0 * (PI * (kf - 1.0) / (2.0 * kf)).sin());
    let corners: Vec<[f64; 2]> = (0..k)
        .map(|i| {
            let t = PI / 2.0 + 2.0 * PI * i as f64 / kf;
            [circ * t.cos(), circ * t.sin()]
        })
        .collect();
    let half = (k - 1) / 2;
    let mut rows = Vec::with_capacity(k * (samples - 1));
    // The arc centered at corner i joins corners i+half and i+half+1, spanning π/k.
    // Walk the boundary counterclockwise: that arc comes right after corner i+half.
    for j in 0..k {
        let c = corners[(j + k - half) % k];
        let a = &corners[j];
        let start = (a[1] - c[1]).atan2(a[0] - c[0]);
        for s in 0..samples - 1 {
            let t = start + (PI / kf) * s as f64 / (samples - 1) as f64;
            rows.push(vec![c[0] + w * t.cos(), c[1] + w * t.sin()]);
        }
    }
    let sagitta = w * (1.0 - (PI / (2.0 * kf * (samples - 1) as f64)).cos());
    Ok(ReuleauxBody {
        arc_centers: corners,
        width: w,
        samples,
        sagitta,
        polygon: VPolytope::from_f64_rows(&rows)?,
    })
}

/// Smallest and largest width over `m` equally spaced directions in a half-turn.
pub fn width_constancy(body: &VPolytope, m: usize) -> Result<(f64, f64)> {
    if m < 3 {
        return Err(Error::InvalidArgument("need at least 3 directions".into()));
    }
    if body.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: body.dim(),
        });
    }
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for j in 0..m {
        let t = PI * j as f64 / m as f64;
        let wv = width(body, &[t.cos(), t.sin()])?;
        lo = lo.min(wv);
        hi = hi.max(wv);
    }
    Ok((lo, hi))
}

/// Regular `n`-gon inscribed in the circle of the given radius.
pub fn regular_polygon(n: usize, radius: f64, phase: f64) -> Result<VPolytope> {
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let t = phase + 2.0 * PI * i as f64 / n as f64;
            vec![radius * t.cos(), radius * t.sin()]
        })
        .collect();
    VPolytope::from_f64_rows(&rows)
}
