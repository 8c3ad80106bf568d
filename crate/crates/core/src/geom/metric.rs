//! Distances on R^n: Euclidean and l_p for p in [1, inf].
//!
//! Every metric exposes a *gauge*, a strictly increasing transform of the
//! distance that stays rational on rational inputs whenever possible
//! (squared distance for Euclidean, sum of p-th powers for integer p, the
//! distance itself for l_1 and l_inf). Diameter and threshold comparisons are
//! done on gauges, which keeps them exact on lattice points.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::point::{Point, PointSet};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub enum Metric {
    #[default]
    Euclidean,
    /// l_p with p >= 1; `f64::INFINITY` is the max norm.
    Lp(f64),
}

impl Metric {
    pub fn lp(p: f64) -> Result<Metric> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidArgument(format!("l_p metric needs p >= 1, got {p}")));
        }
        Ok(if p == 2.0 { Metric::Euclidean } else { Metric::Lp(p) })
    }

    fn integer_power(&self) -> Option<u32> {
        match *self {
            Metric::Euclidean => Some(2),
            Metric::Lp(p) if p.is_finite() && p.fract() == 0.0 && p <= 64.0 => Some(p as u32),
            Metric::Lp(_) => None,
        }
    }

    /// Exact gauge of integer points in machine arithmetic; `None` on
    /// non-integer input or overflow.
    fn integer_gauge(&self, a: &Point, b: &Point) -> Option<Scalar> {
        let k = match (*self, self.integer_power()) {
            (Metric::Lp(p), _) if p.is_infinite() => 0,
            (_, Some(k)) => k,
            _ => return None,
        };
        let mut acc: i128 = 0;
        for (x, y) in a.coords.iter().zip(&b.coords) {
            let d = (small_int(x)? - small_int(y)?).unsigned_abs() as i128;
            acc = if k == 0 { acc.max(d) } else { acc.checked_add(d.checked_pow(k)?)? };
        }
        Some(Scalar::Exact(BigRational::from_integer(acc.into())))
    }

    /// Gauge of the difference vector `a - b`.
    pub fn gauge(&self, a: &Point, b: &Point) -> Scalar {
        if let Some(g) = self.integer_gauge(a, b) {
            return g;
        }
        let diffs = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y);
        match (*self, self.integer_power()) {
            (Metric::Lp(p), _) if p.is_infinite() => diffs.map(|d| d.abs()).fold(Scalar::zero(), |acc, d| match acc.cmp_tol(&d, 0.0) {
                Ordering::Less => d,
                _ => acc,
            }),
            (_, Some(1)) => diffs.fold(Scalar::zero(), |acc, d| acc + d.abs()),
            (_, Some(k)) => diffs.fold(Scalar::zero(), |acc, d| acc + d.abs().powi(k)),
            (Metric::Lp(p), None) => {
                let s: f64 = diffs.map(|d| d.to_f64().abs().powf(p)).sum();
                Scalar::Float(s)
            }
            (Metric::Euclidean, None) => unreachable!(),
        }
    }

    /// Distance corresponding to a gauge value.
    pub fn from_gauge(&self, g: &Scalar) -> f64 {
        let v = g.to_f64();
        match *self {
            Metric::Euclidean => v.sqrt(),
            Metric::Lp(p) if p.is_infinite() || p == 1.0 => v,
            Metric::Lp(p) => v.powf(1.0 / p),
        }
    }

    /// Gauge of a distance value; exact when the power is an integer and `d` is exact.
    pub fn to_gauge(&self, d: &Scalar) -> Scalar {
        match (*self, self.integer_power()) {
            (Metric::Lp(p), _) if p.is_infinite() => d.clone(),
            (_, Some(k)) => d.powi(k),
            (Metric::Lp(p), None) => Scalar::Float(d.to_f64().powf(p)),
            (Metric::Euclidean, None) => unreachable!(),
        }
    }

    pub fn distance(&self, a: &Point, b: &Point) -> f64 {
        self.from_gauge(&self.gauge(a, b))
    }

    pub fn distance_f64(&self, a: &[f64], b: &[f64]) -> f64 {
        let it = a.iter().zip(b).map(|(x, y)| (x - y).abs());
        match *self {
            Metric::Euclidean => it.map(|d| d * d).sum::<f64>().sqrt(),
            Metric::Lp(p) if p.is_infinite() => it.fold(0.0, f64::max),
            Metric::Lp(1.0) => it.sum(),
            Metric::Lp(p) => it.map(|d| d.powf(p)).sum::<f64>().powf(1.0 / p),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Euclidean => write!(f, "euclid"),
            Metric::Lp(p) if p.is_infinite() => write!(f, "lp:inf"),
            Metric::Lp(p) => write!(f, "lp:{p}"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Metric> {
        let s = s.trim();
        if s == "euclid" || s == "euclidean" {
            return Ok(Metric::Euclidean);
        }
        let p = s.strip_prefix("lp:").ok_or_else(|| Error::InvalidArgument(format!("unknown metric '{s}'")))?;
        let p = match p {
            "inf" | "infinity" => f64::INFINITY,
            _ => p.parse::<f64>().map_err(|_| Error::InvalidArgument(format!("bad p in metric '{s}'")))?,
        };
        Metric::lp(p)
    }
}

fn small_int(s: &Scalar) -> Option<i64> {
    match s {
        Scalar::Exact(q) if q.is_integer() => q.numer().to_i64().filter(|v| v.unsigned_abs() < 1 << 62),
        _ => None,
    }
}

/// Diameter together with a pair attaining it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diameter {
    pub gauge: Scalar,
    pub value: f64,
    pub witness: (usize, usize),
}

pub fn diameter(x: &PointSet, metric: Metric) -> Diameter {
    let mut best = Diameter {
        gauge: Scalar::zero(),
        value: 0.0,
        witness: (0, 0),
    };
    let pts = x.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let g = metric.gauge(&pts[i], &pts[j]);
            if g.cmp_tol(&best.gauge, 0.0) == Ordering::Greater {
                best.gauge = g;
                best.witness = (i, j);
            }
        }
    }
    best.value = metric.from_gauge(&best.gauge);
    best
}

/// Euclidean diameter of raw float coordinates.
pub fn diameter_f64(points: &[Vec<f64>]) -> f64 {
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d2: f64 = points[i].iter().zip(&points[j]).map(|(a, b)| (a - b) * (a - b)).sum();
            best = best.max(d2);
        }
    }
    best.sqrt()
}
