//! Embedding planar sets of diameter 1 in a regular hexagon of width 1, and
//! the three-piece partition of that hexagon.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::metric::Metric;
use crate::geom::polytope::{support_value, VPolytope};
use crate::partition::{fan_partition_2d, PartitionResult, Piece};
use crate::width::qsqrt3::{dist2, QSqrt3};

/// Regular hexagon with side normals at `angle + k·60°`.
#[derive(Clone, Debug, Serialize)]
pub struct HexagonPose {
    pub angle: f64,
    pub center: [f64; 2],
    /// Edge length; the distance between opposite sides is `side·√3`.
    pub side: f64,
    #[serde(skip)]
    pub hexagon: VPolytope,
    /// Concurrency defect at the returned angle.
    pub residual: f64,
    pub iterations: usize,
}

impl HexagonPose {
    pub fn new(angle: f64, center: [f64; 2], side: f64) -> HexagonPose {
        let rows: Vec<Vec<f64>> = (0..6)
            .map(|k| {
                let t = angle + PI / 6.0 + k as f64 * PI / 3.0;
                vec![center[0] + side * t.cos(), center[1] + side * t.sin()]
            })
            .collect();
        HexagonPose {
            angle,
            center,
            side,
            hexagon: VPolytope::from_f64_rows(&rows).expect("six planar points"),
            residual: 0.0,
            iterations: 0,
        }
    }

    /// Opposite-side distance.
    pub fn width(&self) -> f64 {
        self.side * 3f64.sqrt()
    }

    pub fn contains(&self, p: &VPolytope, tol: f64) -> bool {
        let h = self.width() / 2.0;
        p.rows().iter().all(|v| {
            (0..3).all(|k| {
                let t = self.angle + k as f64 * PI / 3.0;
                let s = (v[0] - self.center[0]) * t.cos() + (v[1] - self.center[1]) * t.sin();
                s.abs() <= h + tol
            })
        })
    }
}

fn unit(t: f64) -> [f64; 2] {
    [t.cos(), t.sin()]
}

/// Midline offset of the supporting strip with normal at angle `t`.
fn mid(p: &VPolytope, t: f64) -> f64 {
    let u = unit(t);
    let hp = support_value(p, &u).expect("unit direction");
    let hm = support_value(p, &[-u[0], -u[1]]).expect("unit direction");
    0.5 * (hp - hm)
}

/// Concurrency defect of the three strip midlines at `t`, `t+60°`, `t+120°`.
///
/// The unit normals satisfy `u(t) - u(t+60°) + u(t+120°) = 0`, so the
/// midlines meet in one point exactly when this vanishes. It changes sign
/// under `t -> t + 60°`.
pub fn concurrency_defect(p: &VPolytope, t: f64) -> f64 {
    mid(p, t) - mid(p, t + PI / 3.0) + mid(p, t + 2.0 * PI / 3.0)
}

fn concurrency_point(p: &VPolytope, t: f64) -> [f64; 2] {
    let (u, v) = (unit(t), unit(t + PI / 3.0));
    let (c0, c1) = (mid(p, t), mid(p, t + PI / 3.0));
    let det = u[0] * v[1] - u[1] * v[0];
    [(c0 * v[1] - c1 * u[1]) / det, (u[0] * c1 - v[0] * c0) / det]
}

/// Regular hexagon of width 1 containing `p`, which must have diameter 1.
///
/// Each of the three strips of width 1 is centered on `p`; a bisection on the
/// rotation angle makes their midlines concurrent, and then the strips cut
/// out a regular hexagon.
pub fn embed_in_hexagon(p: &VPolytope, tol: f64) -> Result<HexagonPose> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
    }
    let d = p.diameter(Metric::Euclidean).value;
    if (d - 1.0).abs() > tol.max(1e-12) {
        return Err(Error::InvalidArgument(format!("diameter must be 1, got {d}")));
    }
    let (mut lo, mut hi) = (0.0, PI / 3.0);
    let (mut glo, mut t) = (concurrency_defect(p, lo), 0.0);
    let mut g = glo;
    let mut it = 0;
    if g.abs() > tol {
        loop {
            t = 0.5 * (lo + hi);
            g = concurrency_defect(p, t);
            it += 1;
            if g.abs() <= tol {
                break;
            }
            if hi - lo < 1e-15 || it > 200 {
                return Err(Error::NoConvergence { iterations: it, gap: g.abs() });
            }
            if (g > 0.0) == (glo > 0.0) {
                lo = t;
                glo = g;
            } else {
                hi = t;
            }
        }
    }
    let mut pose = HexagonPose::new(t, concurrency_point(p, t), 1.0 / 3f64.sqrt());
    pose.residual = g;
    pose.iterations = it;
    if !pose.contains(p, tol.max(1e-9)) {
        return Err(Error::Degenerate("hexagon fails to contain the body".into()));
    }
    Ok(pose)
}

/// The three pentagons cut from the hexagon by rays from its center toward
/// alternate edge midpoints.
pub fn hexagon_three_partition(pose: &HexagonPose) -> PartitionResult {
    let c = pose.center;
    let h = pose.width() / 2.0;
    let at = |t: f64, r: f64| vec![c[0] + r * t.cos(), c[1] + r * t.sin()];
    let mut pieces = Vec::new();
    for j in 0..3 {
        let t0 = pose.angle + j as f64 * 2.0 * PI / 3.0;
        let cell = vec![
            c.to_vec(),
            at(t0, h),
            at(t0 + PI / 6.0, pose.side),
            at(t0 + PI / 2.0, pose.side),
            at(t0 + 2.0 * PI / 3.0, h),
        ];
        pieces.push(Piece { cells: vec![cell] });
    }
    let part_diameters: Vec<f64> = pieces.iter().map(Piece::diameter).collect();
    let d = 2.0 * pose.side;
    let max = part_diameters.iter().copied().fold(0.0, f64::max);
    let assignment = (0..6).map(|k| k / 2).collect();
    PartitionResult {
        m: 3,
        d,
        theta: max / d,
        assignment,
        part_diameters,
        pieces,
        pattern: format!("hexagon three-pentagon: rays at {:.6} + k·120° from the center", pose.angle),
    }
}

/// Exact pentagon vertices for the width-`w` hexagon with vertices at
/// `k·60°`, center at the origin.
pub fn hexagon_pentagons_exact(w: &BigRational) -> Vec<Vec<[QSqrt3; 2]>> {
    let q = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let qs = |a: BigRational, b: BigRational| QSqrt3::new(a * w, b * w);
    let zero = || q(0, 1);
    // Vertices V_k at radius w/√3: (√3/3, 0), (√3/6, 1/2), (-√3/6, 1/2), ...
    let v = [
        [qs(zero(), q(1, 3)), qs(zero(), zero())],
        [qs(zero(), q(1, 6)), qs(q(1, 2), zero())],
        [qs(zero(), q(-1, 6)), qs(q(1, 2), zero())],
        [qs(zero(), q(-1, 3)), qs(zero(), zero())],
        [qs(zero(), q(-1, 6)), qs(q(-1, 2), zero())],
        [qs(zero(), q(1, 6)), qs(q(-1, 2), zero())],
    ];
    // Edge midpoints M_k between V_k and V_{k+1}, at radius w/2 and angle 30° + k·60°.
    let half = |a: &QSqrt3, b: &QSqrt3| {
        let s = a.clone() + b.clone();
        QSqrt3::new(s.a / q(2, 1), s.b / q(2, 1))
    };
    let m: Vec<[QSqrt3; 2]> = (0..6)
        .map(|k| [half(&v[k][0], &v[(k + 1) % 6][0]), half(&v[k][1], &v[(k + 1) % 6][1])])
        .collect();
    let o = [QSqrt3::zero(), QSqrt3::zero()];
    // Rays toward M_1 (90°), M_3 (210°), M_5 (330°).
    (0..3)
        .map(|j| {
            let a = 2 * j + 1;
            vec![o.clone(), m[a].clone(), v[(a + 1) % 6].clone(), v[(a + 2) % 6].clone(), m[(a + 2) % 6].clone()]
        })
        .collect()
}

/// Largest squared piece diameter of the exact three-pentagon partition.
pub fn hexagon_max_sq_diameter_exact(w: &BigRational) -> QSqrt3 {
    let mut best = QSqrt3::zero();
    for piece in hexagon_pentagons_exact(w) {
        for i in 0..piece.len() {
            for j in i + 1..piece.len() {
                let d = dist2(&piece[i], &piece[j]);
                if d > best {
                    best = d;
                }
            }
        }
    }
    best
}

/// Three pieces of diameter at most `√3/2` for any planar body of diameter 1.
pub fn three_partition_unit_diameter(p: &VPolytope, tol: f64) -> Result<(HexagonPose, PartitionResult)> {
    let pose = embed_in_hexagon(p, tol)?;
    let a = pose.angle;
    let r = fan_partition_2d(p, 3, &[a, a + 2.0 * PI / 3.0, a + 4.0 * PI / 3.0], Some(pose.center))?;
    Ok((pose, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::width::reuleaux::{regular_polygon, reuleaux_polygon};

    #[test]
    fn exact_three_quarters() {
        let one = BigRational::from_integer(BigInt::from(1));
        assert_eq!(hexagon_max_sq_diameter_exact(&one), QSqrt3::from_ratios(3, 4, 0, 1));
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(hexagon_max_sq_diameter_exact(&two), QSqrt3::from_ratios(3, 1, 0, 1));
    }

    #[test]
    fn float_pentagons() {
        let pose = HexagonPose::new(0.3, [1.0, -2.0], 1.0 / 3f64.sqrt());
        let r = hexagon_three_partition(&pose);
        assert!((r.max_part_diameter() - 3f64.sqrt() / 2.0).abs() < 1e-12);
        let area: f64 = r
            .pieces
            .iter()
            .map(|p| crate::geom::polygon::area(&crate::geom::polygon::to_polygon(&p.cells[0])))
            .sum();
        assert!((area - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn reuleaux_fits() {
        let r = reuleaux_polygon(3, 1.0, 64).unwrap();
        let (pose, part) = three_partition_unit_diameter(&r.polygon, 1e-9).unwrap();
        assert!(pose.contains(&r.polygon, 1e-9));
        assert!(part.max_part_diameter() <= 3f64.sqrt() / 2.0 + 1e-9);
    }

    #[test]
    fn disk_any_angle() {
        let disk = regular_polygon(720, 0.5, 0.0).unwrap();
        for t in [0.0, 0.4, 0.9] {
            assert!(concurrency_defect(&disk, t).abs() < 1e-9);
        }
    }

    #[test]
    fn segment_contained() {
        let seg = VPolytope::from_f64_rows(&[vec![0.0, 0.0], vec![0.6, 0.8]]).unwrap();
        let pose = embed_in_hexagon(&seg, 1e-9).unwrap();
        assert!(pose.contains(&seg, 1e-9));
    }

    #[test]
    fn wrong_diameter_rejected() {
        let seg = VPolytope::from_f64_rows(&[vec![0.0, 0.0], vec![2.0, 0.0]]).unwrap();
        assert!(embed_in_hexagon(&seg, 1e-9).is_err());
    }
}
