use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::lp::in_convex_hull_exact;
use crate::geom::metric::{diameter, Diameter, Metric};
use crate::geom::point::{Point, PointSet};
use crate::geom::projection::distance_to_hull;
use crate::scalar::{Scalar, TOL_GEOM};

/// A convex polytope given by its vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VPolytope {
    vertices: PointSet,
    /// Affine dimension of the hull is below the ambient dimension.
    pub degenerate: bool,
}

impl VPolytope {
    /// Normalizes `x` to its hull vertices.
    pub fn from_points(x: &PointSet) -> VPolytope {
        hull_vertex_filter(x, TOL_GEOM)
    }

    /// Trusts the caller that `vertices` are in convex position.
    pub fn from_vertices_unchecked(vertices: PointSet) -> VPolytope {
        let degenerate = affine_rank(&vertices) < vertices.dim();
        VPolytope { vertices, degenerate }
    }

    pub fn from_f64_rows(rows: &[Vec<f64>]) -> Result<VPolytope> {
        Ok(VPolytope::from_points(&PointSet::from_f64_rows(rows)?))
    }

    pub fn vertices(&self) -> &PointSet {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.dim()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.vertices.to_f64_rows()
    }

    pub fn diameter(&self, metric: Metric) -> Diameter {
        diameter(&self.vertices, metric)
    }

    pub fn translate(&self, t: &[Scalar]) -> Result<VPolytope> {
        Ok(VPolytope {
            vertices: self.vertices.translate(t)?,
            degenerate: self.degenerate,
        })
    }

    pub fn scale(&self, lambda: &Scalar) -> VPolytope {
        VPolytope::from_vertices_unchecked(self.vertices.scale(lambda))
    }
}

fn dedup(x: &PointSet, tol: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(x.len());
    for p in x.points() {
        if !out.iter().any(|q| q.same_as(p, tol)) {
            out.push(p.clone());
        }
    }
    out
}

/// Returns the hull vertices of `x`, in input order.
///
/// Planar sets use the monotone chain. Otherwise exact sets are filtered
/// with exact LP membership tests, and float sets by projecting each point
/// onto the hull of the others.
pub fn hull_vertex_filter(x: &PointSet, tol: f64) -> VPolytope {
    let pts = dedup(x, tol);
    let exact = pts.iter().all(Point::is_exact);
    let keep: Vec<bool> = if pts.len() <= 2 {
        vec![true; pts.len()]
    } else if x.dim() == 2 {
        let mut k = vec![false; pts.len()];
        for i in hull_indices_2d(&pts, exact) {
            k[i] = true;
        }
        k
    } else if exact {
        let q: Vec<Vec<BigRational>> = pts.iter().map(|p| p.coords.iter().map(|c| c.as_exact().unwrap().clone()).collect()).collect();
        (0..q.len())
            .map(|i| {
                let others: Vec<Vec<BigRational>> = q.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
                !in_convex_hull_exact(&others, &q[i])
            })
            .collect()
    } else {
        let f: Vec<Vec<f64>> = pts.iter().map(Point::to_f64).collect();
        (0..f.len())
            .map(|i| {
                let others: Vec<Vec<f64>> = f.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
                match distance_to_hull(&f[i], &others, tol * 1e-3) {
                    Ok(d) => d > tol,
                    Err(_) => true,
                }
            })
            .collect()
    };
    let vertices: Vec<Point> = pts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
    VPolytope::from_vertices_unchecked(PointSet::new(vertices).expect("hull of a nonempty set is nonempty"))
}

/// Affine rank of a point set (float elimination with `TOL_GEOM`, exact for rationals).
pub fn affine_rank(x: &PointSet) -> usize {
    if x.len() <= 1 {
        return 0;
    }
    let base = x.get(0);
    if x.is_exact() {
        let mut rows: Vec<Vec<BigRational>> = x.points()[1..]
            .iter()
            .map(|p| p.coords.iter().zip(&base.coords).map(|(a, b)| (a - b).as_exact().unwrap().clone()).collect())
            .collect();
        rank_exact(&mut rows)
    } else {
        let b = base.to_f64();
        let mut rows: Vec<Vec<f64>> = x.points()[1..]
            .iter()
            .map(|p| p.to_f64().iter().zip(&b).map(|(a, c)| a - c).collect())
            .collect();
        rank_f64(&mut rows, TOL_GEOM)
    }
}

fn rank_exact(rows: &mut [Vec<BigRational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &rows[rank][c];
                for k in c..cols {
                    let d = &f * &rows[rank][k];
                    rows[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_f64(rows: &mut [Vec<f64>], tol: f64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let scale = rows.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else {
            break;
        };
        if rows[p][c].abs() <= tol * scale {
            continue;
        }
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][c] / rows[rank][c];
                for k in c..cols {
                    rows[r][k] -= f * rows[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Ordered planar hull.
#[derive(Clone, Debug)]
pub struct Hull2d {
    /// Hull vertices, counterclockwise, as a polytope.
    pub polytope: VPolytope,
    /// All input points were collinear (or coincident).
    pub degenerate: bool,
}

fn orient(o: &Point, a: &Point, b: &Point, exact: bool) -> Ordering {
    let (ox, oy) = (&o.coords[0], &o.coords[1]);
    if exact {
        let cross = (&a.coords[0] - ox) * (&b.coords[1] - oy) - (&a.coords[1] - oy) * (&b.coords[0] - ox);
        return cross.cmp_tol(&Scalar::zero(), 0.0);
    }
    let (o, a, b) = (o.to_f64(), a.to_f64(), b.to_f64());
    let (u, v) = ([a[0] - o[0], a[1] - o[1]], [b[0] - o[0], b[1] - o[1]]);
    let cross = u[0] * v[1] - u[1] * v[0];
    // Relative test: the sine of the turn angle against the tolerance.
    let scale = u[0].hypot(u[1]) * v[0].hypot(v[1]);
    if cross.abs() <= TOL_GEOM * scale {
        Ordering::Equal
    } else if cross > 0.0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Indices of the counterclockwise hull of planar points, collinear points dropped.
fn hull_indices_2d(pts: &[Point], exact: bool) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| {
        let (a, b) = (&pts[i], &pts[j]);
        a.coords[0].cmp_tol(&b.coords[0], 0.0).then_with(|| a.coords[1].cmp_tol(&b.coords[1], 0.0))
    });
    if order.len() <= 2 {
        return order;
    }
    let chain = |it: &mut dyn Iterator<Item = usize>| {
        let mut h: Vec<usize> = Vec::new();
        for i in it {
            while h.len() >= 2 && orient(&pts[h[h.len() - 2]], &pts[h[h.len() - 1]], &pts[i], exact) != Ordering::Greater {
                h.pop();
            }
            h.push(i);
        }
        h.pop();
        h
    };
    let mut lower = chain(&mut order.iter().copied());
    lower.extend(chain(&mut order.iter().rev().copied()));
    lower
}

/// Andrew's monotone chain. Collinear boundary points are dropped.
pub fn convex_hull_2d(x: &PointSet) -> Result<Hull2d> {
    if x.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: x.dim() });
    }
    let pts = dedup(x, TOL_GEOM);
    let idx = hull_indices_2d(&pts, x.is_exact());
    let degenerate = idx.len() < 3;
    let hull: Vec<Point> = idx.into_iter().map(|i| pts[i].clone()).collect();
    Ok(Hull2d {
        degenerate,
        polytope: VPolytope::from_vertices_unchecked(PointSet::new(hull)?),
    })
}

/// Signed area of a counterclockwise vertex cycle.
pub fn polygon_area(poly: &[Vec<f64>]) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    let mut s = 0.0;
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        s += a[0] * b[1] - a[1] * b[0];
    }
    0.5 * s
}

fn check_direction(p: &VPolytope, u: &[f64]) -> Result<f64> {
    if u.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: u.len(),
        });
    }
    let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroDirection);
    }
    Ok(norm)
}

/// max over vertices of <v, u> / |u|.
pub fn support_value(p: &VPolytope, u: &[f64]) -> Result<f64> {
    let norm = check_direction(p, u)?;
    Ok(p.rows()
        .iter()
        .map(|v| v.iter().zip(u).map(|(a, b)| a * b).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
        / norm)
}

/// Width `h(u) + h(-u)` along the unit direction of `u`.
pub fn width(p: &VPolytope, u: &[f64]) -> Result<f64> {
    let neg: Vec<f64> = u.iter().map(|v| -v).collect();
    Ok(support_value(p, u)? + support_value(p, &neg)?)
}

/// Width times |u|, with no normalization: exact for exact vertices and direction.
pub fn width_unnormalized(p: &VPolytope, u: &[Scalar]) -> Result<Scalar> {
    if u.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: u.len(),
        });
    }
    if u.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroDirection);
    }
    let dots: Vec<Scalar> = p
        .vertices()
        .points()
        .iter()
        .map(|v| v.coords.iter().zip(u).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
        .collect();
    let pick = |want: Ordering| dots.iter().cloned().reduce(|a, b| if b.cmp_tol(&a, 0.0) == want { b } else { a }).unwrap();
    Ok(pick(Ordering::Greater) - pick(Ordering::Less))
}
