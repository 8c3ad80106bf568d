use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::metric::{diameter, Metric};
use crate::geom::point::PointSet;
use crate::graph::{chromatic_number, color_with, ColorOutcome, Graph};
use crate::partition::threshold::Gauges;
use crate::partition::PartitionResult;
use crate::scalar::{Scalar, TOL_GEOM};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiniteOptions {
    pub metric: Metric,
    /// Absolute tolerance for float threshold comparisons.
    pub tol: f64,
    /// Relative tolerance for "at the diameter" in float mode.
    pub diametral_rel_tol: f64,
    /// Search-node budget per coloring decision.
    pub budget: u64,
}

impl Default for FiniteOptions {
    fn default() -> Self {
        FiniteOptions {
            metric: Metric::Euclidean,
            tol: TOL_GEOM,
            diametral_rel_tol: 1e-9,
            budget: 2_000_000,
        }
    }
}

/// `b(X)` for a finite set, possibly as a bracket when the budget ran out.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BFinite {
    pub lower: usize,
    pub upper: usize,
    /// Proper coloring of the diametral graph with `upper` colors.
    pub coloring: Vec<usize>,
    pub diametral_pairs: usize,
    /// Relative tolerance used for the diametral graph; `None` in exact mode.
    pub tolerance: Option<f64>,
}

impl BFinite {
    pub fn value(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

fn diametral_graph(x: &PointSet, opts: &FiniteOptions) -> Result<(Graph, Option<f64>)> {
    let d = diameter(x, opts.metric);
    if d.gauge.is_zero() {
        return Err(Error::Degenerate("all points coincide; diameter is zero".into()));
    }
    let gauges = Gauges::new(x, opts.metric);
    let exact = d.gauge.is_exact();
    let mut g = Graph::new(x.len());
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let gij = gauges.get(i, j);
            let hit = if exact && gij.is_exact() {
                *gij == d.gauge
            } else {
                (opts.metric.from_gauge(gij) - d.value).abs() <= opts.diametral_rel_tol * d.value
            };
            if hit {
                g.add_edge(i, j);
            }
        }
    }
    Ok((g, (!exact).then_some(opts.diametral_rel_tol)))
}

/// Smallest number of parts of strictly smaller diameter: the chromatic
/// number of the graph of diametral pairs.
pub fn b_finite(x: &PointSet, opts: &FiniteOptions) -> Result<BFinite> {
    if x.len() < 2 {
        return Err(Error::InvalidArgument("b(X) needs at least two points".into()));
    }
    let (g, tolerance) = diametral_graph(x, opts)?;
    let chi = chromatic_number(&g, opts.budget);
    Ok(BFinite {
        lower: chi.lower,
        upper: chi.upper,
        coloring: chi.coloring,
        diametral_pairs: g.edge_count(),
        tolerance,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum FmOutcome {
    Exact(PartitionResult),
    /// A coloring decision ran out of budget; `best` achieves `theta_hi`.
    Bracket {
        theta_lo: f64,
        theta_hi: f64,
        best: PartitionResult,
    },
}

impl FmOutcome {
    pub fn theta(&self) -> Option<f64> {
        match self {
            FmOutcome::Exact(r) => Some(r.theta),
            FmOutcome::Bracket { .. } => None,
        }
    }

    pub fn best(&self) -> &PartitionResult {
        match self {
            FmOutcome::Exact(r) => r,
            FmOutcome::Bracket { best, .. } => best,
        }
    }
}

fn result_from_coloring(x: &PointSet, gauges: &Gauges, metric: Metric, m: usize, colors: Vec<usize>, d: f64) -> PartitionResult {
    let mut part_gauge: Vec<Scalar> = vec![Scalar::zero(); m];
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if colors[i] == colors[j] {
                let g = gauges.get(i, j);
                let k = colors[i];
                if g.cmp_tol(&part_gauge[k], 0.0) == Ordering::Greater {
                    part_gauge[k] = g.clone();
                }
            }
        }
    }
    let part_diameters: Vec<f64> = part_gauge.iter().map(|g| metric.from_gauge(g)).collect();
    let max = part_diameters.iter().copied().fold(0.0, f64::max);
    PartitionResult {
        m,
        d,
        theta: if d > 0.0 { max / d } else { 0.0 },
        assignment: colors,
        part_diameters,
        pieces: Vec::new(),
        pattern: "finite: threshold-graph coloring".into(),
    }
}

/// Exact `f_m` of a finite set.
///
/// The candidate thresholds are 0 and the realized pairwise distances; a
/// binary search finds the smallest one whose threshold graph is `m`-colorable.
pub fn f_m_finite(x: &PointSet, m: usize, opts: &FiniteOptions) -> Result<FmOutcome> {
    if x.len() < 2 {
        return Err(Error::InvalidArgument("f_m needs at least two points".into()));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let d = diameter(x, opts.metric);
    if d.gauge.is_zero() {
        return Err(Error::Degenerate("all points coincide; diameter is zero".into()));
    }
    let gauges = Gauges::new(x, opts.metric);
    let mut cands: Vec<Scalar> = vec![Scalar::zero()];
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            cands.push(gauges.get(i, j).clone());
        }
    }
    cands.sort_by(|a, b| a.cmp_tol(b, 0.0));
    let mut distinct: Vec<Scalar> = Vec::with_capacity(cands.len());
    for c in cands {
        match distinct.last() {
            Some(last) if last.eq_tol(&c, opts.tol) => {}
            _ => distinct.push(c),
        }
    }
    // The largest candidate is the diameter itself: the graph is empty.
    let mut hi = distinct.len() - 1;
    let mut hi_colors = vec![0; x.len()];
    let mut lo_fail: Option<usize> = None;
    let mut lo = 0usize;
    let mut unknown = false;
    while lo < hi {
        let mid = (lo + hi) / 2;
        let g = gauges.graph_above(&distinct[mid], opts.tol);
        match color_with(&g, m, opts.budget) {
            ColorOutcome::Colorable(c) => {
                hi = mid;
                hi_colors = c;
            }
            ColorOutcome::NotColorable => {
                lo_fail = Some(mid);
                lo = mid + 1;
            }
            ColorOutcome::Unknown => {
                unknown = true;
                break;
            }
        }
    }
    let best = result_from_coloring(x, &gauges, opts.metric, m, hi_colors, d.value);
    if unknown {
        let theta_lo = lo_fail.map_or(0.0, |k| opts.metric.from_gauge(&distinct[k + 1]) / d.value);
        Ok(FmOutcome::Bracket {
            theta_lo,
            theta_hi: best.theta,
            best,
        })
    } else {
        Ok(FmOutcome::Exact(best))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PointSet {
        let h = 3f64.sqrt() / 2.0;
        PointSet::from_f64_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, h]]).unwrap()
    }

    #[test]
    fn triangle_values() {
        let o = FiniteOptions::default();
        assert_eq!(f_m_finite(&triangle(), 3, &o).unwrap().theta(), Some(0.0));
        let t2 = f_m_finite(&triangle(), 2, &o).unwrap().theta().unwrap();
        assert!((t2 - 1.0).abs() < 1e-12);
        assert_eq!(b_finite(&triangle(), &o).unwrap().value(), Some(3));
    }

    #[test]
    fn square_and_segment() {
        let o = FiniteOptions::default();
        let sq = PointSet::from_i64_rows(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        let b = b_finite(&sq, &o).unwrap();
        assert_eq!(b.value(), Some(2));
        assert_eq!(b.tolerance, None);
        let line = PointSet::from_i64_rows(&[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(b_finite(&line, &o).unwrap().value(), Some(2));
    }

    #[test]
    fn coincident_points_rejected() {
        let x = PointSet::from_i64_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(b_finite(&x, &FiniteOptions::default()).is_err());
        assert!(f_m_finite(&x, 2, &FiniteOptions::default()).is_err());
    }

    #[test]
    fn zero_budget_brackets() {
        let o = FiniteOptions {
            budget: 0,
            ..FiniteOptions::default()
        };
        let sq = PointSet::from_i64_rows(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
        match f_m_finite(&sq, 2, &o).unwrap() {
            FmOutcome::Bracket { theta_lo, theta_hi, .. } => assert!(theta_lo <= theta_hi),
            other => panic!("expected bracket, got {other:?}"),
        }
    }
}
