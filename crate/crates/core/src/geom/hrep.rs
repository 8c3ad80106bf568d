//! Facets of small 3D polytopes and vertex enumeration from half-spaces.
//!
//! Both routines are brute force over triples, which is fine for the tens of
//! vertices and planes that partition patterns produce.

use crate::geom::metric::diameter_f64;

/// Half-space `normal . x <= offset`, with a unit normal.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace {
    pub normal: Vec<f64>,
    pub offset: f64,
}

impl HalfSpace {
    pub fn new(normal: Vec<f64>, offset: f64) -> Option<HalfSpace> {
        let n = normal.iter().map(|v| v * v).sum::<f64>().sqrt();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(HalfSpace {
            normal: normal.iter().map(|v| v / n).collect(),
            offset: offset / n,
        })
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() - self.offset
    }

    pub fn flipped(&self) -> HalfSpace {
        HalfSpace {
            normal: self.normal.iter().map(|v| -v).collect(),
            offset: -self.offset,
        }
    }
}

fn sub(a: &[f64], b: &[f64]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Facet half-spaces of a full-dimensional 3D vertex set. Empty if the set is flat.
pub fn facets_3d(vertices: &[Vec<f64>], tol: f64) -> Vec<HalfSpace> {
    let n = vertices.len();
    let scale = diameter_f64(vertices).max(1e-300);
    let mut out: Vec<HalfSpace> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = cross(sub(&vertices[j], &vertices[i]), sub(&vertices[k], &vertices[i]));
                let len = (nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]).sqrt();
                if len <= tol * scale * scale {
                    continue;
                }
                let Some(h) = HalfSpace::new(nrm.to_vec(), nrm.iter().zip(&vertices[i]).map(|(a, b)| a * b).sum()) else {
                    continue;
                };
                let (mut above, mut below) = (false, false);
                for v in vertices {
                    let s = h.eval(v);
                    if s > tol * scale {
                        above = true;
                    } else if s < -tol * scale {
                        below = true;
                    }
                }
                let h = match (above, below) {
                    (false, true) => h,
                    (true, false) => h.flipped(),
                    _ => continue,
                };
                let dup = out
                    .iter()
                    .any(|g| g.normal.iter().zip(&h.normal).all(|(a, b)| (a - b).abs() <= 1e-9) && (g.offset - h.offset).abs() <= tol * scale);
                if !dup {
                    out.push(h);
                }
            }
        }
    }
    out
}

fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(a);
    if d.abs() < 1e-12 {
        return None;
    }
    let mut x = [0.0; 3];
    for c in 0..3 {
        let mut m = a;
        for r in 0..3 {
            m[r][c] = b[r];
        }
        x[c] = det(m) / d;
    }
    Some(x)
}

/// Vertices of the bounded 3D polytope `{x : h.eval(x) <= 0 for h in planes}`.
pub fn vertices_from_halfspaces_3d(planes: &[HalfSpace], tol: f64) -> Vec<Vec<f64>> {
    let m = planes.len();
    let mut out: Vec<Vec<f64>> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let a = [
                    [planes[i].normal[0], planes[i].normal[1], planes[i].normal[2]],
                    [planes[j].normal[0], planes[j].normal[1], planes[j].normal[2]],
                    [planes[k].normal[0], planes[k].normal[1], planes[k].normal[2]],
                ];
                let Some(x) = solve3(a, [planes[i].offset, planes[j].offset, planes[k].offset]) else {
                    continue;
                };
                if planes.iter().all(|h| h.eval(&x) <= tol) {
                    let x = x.to_vec();
                    if !out.iter().any(|y| y.iter().zip(&x).all(|(p, q)| (p - q).abs() <= tol)) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Vec<Vec<f64>> {
        let mut v = Vec::new();
        for x in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for z in [0.0, 1.0] {
                    v.push(vec![x, y, z]);
                }
            }
        }
        v
    }

    #[test]
    fn cube_has_six_facets() {
        let f = facets_3d(&cube(), 1e-9);
        assert_eq!(f.len(), 6);
        let back = vertices_from_halfspaces_3d(&f, 1e-9);
        assert_eq!(back.len(), 8);
    }

    #[test]
    fn cut_cube_corner() {
        let mut f = facets_3d(&cube(), 1e-9);
        f.push(HalfSpace::new(vec![1.0, 1.0, 1.0], 2.5).unwrap());
        assert_eq!(vertices_from_halfspaces_3d(&f, 1e-9).len(), 10);
    }

    #[test]
    fn flat_set_has_no_facets() {
        let sq = vec![vec![0.0, 0.0, 0.0], vec![1.0, 0.0, 0.0], vec![1.0, 1.0, 0.0], vec![0.0, 1.0, 0.0]];
        assert!(facets_3d(&sq, 1e-9).is_empty());
    }
}
