//! Partitions into parts of small diameter.
//!
//! For finite sets the optimum is exact: a partition into `m` parts of
//! diameter at most `D` is the same thing as a proper `m`-coloring of the
//! graph joining pairs farther apart than `D`. Polytopes get verified upper
//! bounds from explicit geometric patterns.

pub mod continuity;
pub mod finite;
pub mod patterns;
pub mod threshold;
pub mod verify;
pub mod witness;

use serde::{Deserialize, Serialize};

use crate::geom::metric::Metric;
use crate::geom::point::PointSet;

pub use continuity::{check_continuity, ContinuityCheck};
pub use finite::{b_finite, f_m_finite, BFinite, FiniteOptions, FmOutcome};
pub use patterns::{cut_tree_partition, fan_partition_2d, power_partition, Body, CutTree, Pattern};
pub use threshold::{threshold_graph, ThresholdGraph};
pub use verify::{verify_f_bound, SearchParams, VerifyOutcome};

/// One part of a geometric partition: a union of convex cells.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub cells: Vec<Vec<Vec<f64>>>,
}

impl Piece {
    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    pub fn vertices(&self) -> Vec<Vec<f64>> {
        self.cells.iter().flatten().cloned().collect()
    }

    pub fn diameter(&self) -> f64 {
        crate::geom::metric::diameter_f64(&self.vertices())
    }
}

/// An `m`-part partition with its diameters and the ratio `theta = max part diameter / d`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionResult {
    pub m: usize,
    /// Diameter of the whole set.
    pub d: f64,
    pub theta: f64,
    /// Part index of each input point (finite sets) or each polytope vertex (patterns).
    pub assignment: Vec<usize>,
    pub part_diameters: Vec<f64>,
    /// Geometric pieces; empty for finite-set partitions.
    pub pieces: Vec<Piece>,
    pub pattern: String,
}

impl PartitionResult {
    pub fn max_part_diameter(&self) -> f64 {
        self.part_diameters.iter().copied().fold(0.0, f64::max)
    }

    /// Recomputes part diameters of a finite-set partition from the points.
    pub fn recheck_finite(&self, x: &PointSet, metric: Metric, tol: f64) -> bool {
        if self.assignment.len() != x.len() || self.assignment.iter().any(|&a| a >= self.m) {
            return false;
        }
        let mut diam = vec![0.0f64; self.m];
        for i in 0..x.len() {
            for j in i + 1..x.len() {
                if self.assignment[i] == self.assignment[j] {
                    let d = metric.distance(x.get(i), x.get(j));
                    let k = self.assignment[i];
                    diam[k] = diam[k].max(d);
                }
            }
        }
        diam.iter().all(|&v| v <= self.theta * self.d + tol) && diam.iter().zip(&self.part_diameters).all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Recomputes geometric piece diameters.
    pub fn recheck_pieces(&self, tol: f64) -> bool {
        self.pieces.len() == self.m
            && self
                .pieces
                .iter()
                .zip(&self.part_diameters)
                .all(|(p, &d)| (p.diameter() - d).abs() <= tol && d <= self.theta * self.d + tol)
    }
}
