use serde::Serialize;

use crate::error::Result;
use crate::geom::point::{Point, PointSet};
use crate::geom::polytope::VPolytope;
use crate::geom::shell::{shell_check, ShellCheck, ShellSpec};
use crate::scalar::Scalar;

/// Polytope with vertices on `κ·ℤⁿ`, stored as integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePolytope {
    /// Hull vertices in lattice units, sorted lexicographically.
    pub vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn new(mut vertices: Vec<Vec<i64>>) -> LatticePolytope {
        vertices.sort();
        vertices.dedup();
        LatticePolytope { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }

    /// Canonical id: the sorted vertex list.
    pub fn id(&self) -> String {
        self.vertices
            .iter()
            .map(|v| format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn to_vpolytope(&self, kappa: &Scalar) -> Result<VPolytope> {
        let pts = self
            .vertices
            .iter()
            .map(|v| Point::new(v.iter().map(|&c| &Scalar::int(c) * kappa).collect()))
            .collect();
        Ok(VPolytope::from_vertices_unchecked(PointSet::new(pts)?))
    }

    /// Shell check in lattice units.
    pub fn shell_check(&self, lattice_shell: &ShellSpec) -> Result<ShellCheck> {
        let rows: Vec<Vec<i64>> = self.vertices.clone();
        let p = VPolytope::from_vertices_unchecked(PointSet::from_i64_rows(&rows)?);
        Ok(shell_check(&p, lattice_shell))
    }
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counterclockwise hull of integer points, collinear points dropped.
pub fn hull_2d_int(pts: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut p: Vec<[i64; 2]> = pts.to_vec();
    p.sort();
    p.dedup();
    if p.len() < 3 {
        return p;
    }
    let mut h: Vec<[i64; 2]> = Vec::with_capacity(2 * p.len());
    for &q in &p {
        while h.len() >= 2 && cross(h[h.len() - 2], h[h.len() - 1], q) <= 0 {
            h.pop();
        }
        h.push(q);
    }
    let lower = h.len() + 1;
    for &q in p.iter().rev().skip(1) {
        while h.len() >= lower && cross(h[h.len() - 2], h[h.len() - 1], q) <= 0 {
            h.pop();
        }
        h.push(q);
    }
    h.pop();
    h
}

/// Shell test of a counterclockwise integer polygon in lattice units:
/// vertices within `outer`, every edge line at distance at least `inner` from the origin.
pub fn polygon_in_shell(hull: &[[i64; 2]], inner: f64, outer: f64) -> bool {
    if hull.len() < 3 {
        return false;
    }
    let o2 = outer * outer * (1.0 + 1e-12);
    if hull.iter().any(|v| ((v[0] * v[0] + v[1] * v[1]) as f64) > o2) {
        return false;
    }
    let i2 = inner * inner * (1.0 - 1e-12);
    let n = hull.len();
    (0..n).all(|i| {
        let (a, b) = (hull[i], hull[(i + 1) % n]);
        let c = cross(a, b, [0, 0]);
        let (ex, ey) = (b[0] - a[0], b[1] - a[1]);
        c > 0 && (c as f64) * (c as f64) >= i2 * ((ex * ex + ey * ey) as f64)
    })
}

/// The 8 symmetries of the square lattice.
pub fn d4(v: [i64; 2], g: usize) -> [i64; 2] {
    let [x, y] = v;
    match g {
        0 => [x, y],
        1 => [-y, x],
        2 => [-x, -y],
        3 => [y, -x],
        4 => [x, -y],
        5 => [-x, y],
        6 => [y, x],
        _ => [-y, -x],
    }
}

/// Lexicographically smallest image of a vertex set under the symmetry group,
/// and the size of its orbit.
pub fn canonical_d4(vertices: &[[i64; 2]]) -> (Vec<[i64; 2]>, usize) {
    let mut images: Vec<Vec<[i64; 2]>> = (0..8)
        .map(|g| {
            let mut w: Vec<[i64; 2]> = vertices.iter().map(|&v| d4(v, g)).collect();
            w.sort();
            w
        })
        .collect();
    images.sort();
    images.dedup();
    let orbit = images.len();
    (images.swap_remove(0), orbit)
}

/// Integer points `z` with `|z| <= radius` in dimension 2, sorted.
pub fn disk_points(radius: f64) -> Vec<[i64; 2]> {
    if radius < 0.0 {
        return Vec::new();
    }
    let r = radius.floor() as i64;
    let r2 = radius * radius * (1.0 + 1e-12);
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if ((x * x + y * y) as f64) <= r2 {
                out.push([x, y]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_hull() {
        let h = hull_2d_int(&[[0, 0], [2, 0], [2, 2], [0, 2], [1, 1], [1, 0]]);
        assert_eq!(h, vec![[0, 0], [2, 0], [2, 2], [0, 2]]);
    }

    #[test]
    fn orbit_sizes() {
        let sq = [[1, 1], [-1, 1], [-1, -1], [1, -1]];
        assert_eq!(canonical_d4(&sq).1, 1);
        let tri = [[1, 0], [0, 1], [-1, -1]];
        assert_eq!(canonical_d4(&tri).1, 4);
        let gen = [[2, 0], [0, 1], [-1, -1], [1, -2]];
        assert_eq!(canonical_d4(&gen).1, 8);
    }

    #[test]
    fn shell_of_square() {
        let h = hull_2d_int(&[[1, 1], [-1, 1], [-1, -1], [1, -1]]);
        assert!(polygon_in_shell(&h, 1.0, 1.5));
        assert!(!polygon_in_shell(&h, 1.01, 1.5));
        assert!(!polygon_in_shell(&h, 0.5, 1.4));
    }

    #[test]
    fn disk_counts() {
        assert_eq!(disk_points(1.4 / 0.5).len(), 21);
        assert_eq!(disk_points(0.5).len(), 1);
        assert!(disk_points(-1.0).is_empty());
    }
}
