use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub coords: Vec<Scalar>,
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point { coords }
    }

    pub fn from_f64(coords: &[f64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| Scalar::Float(c)).collect(),
        }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Point {
            coords: coords.iter().map(|&c| Scalar::int(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_exact(&self) -> bool {
        self.coords.iter().all(Scalar::is_exact)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }

    /// Exact equality for exact points, `tol` per coordinate otherwise.
    pub fn same_as(&self, other: &Point, tol: f64) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(a, b)| a.eq_tol(b, tol))
    }
}

/// A nonempty finite point configuration of a single dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty)?;
        let dim = first.dim();
        if dim == 0 {
            return Err(Error::InvalidArgument("points must have dimension >= 1".into()));
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn from_f64_rows(rows: &[Vec<f64>]) -> Result<Self> {
        PointSet::new(rows.iter().map(|r| Point::from_f64(r)).collect())
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        PointSet::new(rows.iter().map(|r| Point::from_i64(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn is_exact(&self) -> bool {
        self.points.iter().all(Point::is_exact)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.points.iter().map(Point::to_f64).collect()
    }

    pub fn translate(&self, t: &[Scalar]) -> Result<PointSet> {
        if t.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: t.len(),
            });
        }
        let points = self
            .points
            .iter()
            .map(|p| Point::new(p.coords.iter().zip(t).map(|(a, b)| a + b).collect()))
            .collect();
        PointSet::new(points)
    }

    pub fn scale(&self, lambda: &Scalar) -> PointSet {
        let points = self.points.iter().map(|p| Point::new(p.coords.iter().map(|a| a * lambda).collect())).collect();
        PointSet { dim: self.dim, points }
    }

    pub fn subset(&self, idx: &[usize]) -> Result<PointSet> {
        PointSet::new(idx.iter().map(|&i| self.points[i].clone()).collect())
    }
}
