use serde::Serialize;

use crate::geom::metric::{diameter, Diameter, Metric};
use crate::geom::point::PointSet;
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Graph on point indices joining pairs strictly farther apart than a threshold.
#[derive(Clone, Debug, Serialize)]
pub struct ThresholdGraph {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Threshold distance.
    pub threshold: Scalar,
    /// Diameter of the source set.
    pub d: Diameter,
    #[serde(skip)]
    pub graph: Graph,
}

/// Pairwise gauges, row-major upper triangle accessor.
pub(crate) struct Gauges {
    n: usize,
    vals: Vec<Scalar>,
}

impl Gauges {
    pub(crate) fn new(x: &PointSet, metric: Metric) -> Gauges {
        let n = x.len();
        let mut vals = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let g = metric.gauge(x.get(i), x.get(j));
                vals[j * n + i] = g.clone();
                vals[i * n + j] = g;
            }
        }
        Gauges { n, vals }
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.vals[i * self.n + j]
    }

    pub(crate) fn graph_above(&self, g: &Scalar, tol: f64) -> Graph {
        let mut out = Graph::new(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j).gt_tol(g, tol) {
                    out.add_edge(i, j);
                }
            }
        }
        out
    }
}

/// Edges join pairs with distance strictly above `threshold` (exact on rational input;
/// float distances within `tol` of the threshold count as equal to it).
pub fn threshold_graph(x: &PointSet, metric: Metric, threshold: &Scalar, tol: f64) -> ThresholdGraph {
    let gauges = Gauges::new(x, metric);
    let graph = gauges.graph_above(&metric.to_gauge(threshold), tol);
    ThresholdGraph {
        n_vertices: x.len(),
        edges: graph.edges(),
        threshold: threshold.clone(),
        d: diameter(x, metric),
        graph,
    }
}
