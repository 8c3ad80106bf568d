//! Membership in the shell `r_inner B ⊆ P ⊆ r_outer B` (balls at the origin).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::hrep::facets_3d;
use crate::geom::polytope::{convex_hull_2d, VPolytope};
use crate::scalar::TOL_GEOM;

/// Direction samples used for the inner certificate in dimension >= 4.
pub const SAMPLED_DIRECTIONS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShellSpec {
    pub r_inner: f64,
    pub r_outer: f64,
}

impl ShellSpec {
    pub fn new(r_inner: f64, r_outer: f64) -> Result<ShellSpec> {
        if !(r_inner > 0.0 && r_inner <= r_outer && r_outer.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "shell radii must satisfy 0 < inner <= outer, got ({r_inner}, {r_outer})"
            )));
        }
        Ok(ShellSpec { r_inner, r_outer })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum InnerCertificate {
    /// Every facet hyperplane checked (2D edges, 3D facets).
    Facets { count: usize },
    /// Support values checked on a fixed pseudo-random direction sample; necessary, not sufficient.
    Sampled { directions: usize, seed: u64 },
    /// Hull is lower-dimensional, so it contains no ball.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShellCheck {
    pub ok: bool,
    pub outer_ok: bool,
    pub inner_ok: bool,
    pub max_vertex_norm: f64,
    /// Smallest origin-to-facet distance (or sampled support value); negative if the origin is outside.
    pub min_facet_distance: f64,
    pub certificate: InnerCertificate,
}

pub fn shell_check(p: &VPolytope, s: &ShellSpec) -> ShellCheck {
    let rows = p.rows();
    let max_vertex_norm = rows.iter().map(|v| v.iter().map(|c| c * c).sum::<f64>().sqrt()).fold(0.0, f64::max);
    let outer_ok = max_vertex_norm <= s.r_outer + TOL_GEOM;
    let (min_facet_distance, certificate) = inner_distance(p, &rows);
    let inner_ok = certificate != InnerCertificate::Degenerate && min_facet_distance >= s.r_inner - TOL_GEOM;
    ShellCheck {
        ok: outer_ok && inner_ok,
        outer_ok,
        inner_ok,
        max_vertex_norm,
        min_facet_distance,
        certificate,
    }
}

fn inner_distance(p: &VPolytope, rows: &[Vec<f64>]) -> (f64, InnerCertificate) {
    match p.dim() {
        1 => {
            let lo = rows.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
            let hi = rows.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
            if rows.len() < 2 {
                return (f64::NEG_INFINITY, InnerCertificate::Degenerate);
            }
            (hi.min(-lo), InnerCertificate::Facets { count: 2 })
        }
        2 => {
            let Ok(h) = convex_hull_2d(p.vertices()) else {
                return (f64::NEG_INFINITY, InnerCertificate::Degenerate);
            };
            if h.degenerate {
                return (f64::NEG_INFINITY, InnerCertificate::Degenerate);
            }
            let cyc = h.polytope.rows();
            let n = cyc.len();
            let d = (0..n)
                .map(|i| {
                    let (a, b) = (&cyc[i], &cyc[(i + 1) % n]);
                    let (ex, ey) = (b[0] - a[0], b[1] - a[1]);
                    // Signed distance of the origin to the edge line, positive on the inner side.
                    (ex * (-a[1]) - ey * (-a[0])) / (ex * ex + ey * ey).sqrt()
                })
                .fold(f64::INFINITY, f64::min);
            (d, InnerCertificate::Facets { count: n })
        }
        3 => {
            let f = facets_3d(rows, TOL_GEOM);
            if f.is_empty() {
                return (f64::NEG_INFINITY, InnerCertificate::Degenerate);
            }
            let d = f.iter().map(|h| h.offset).fold(f64::INFINITY, f64::min);
            (d, InnerCertificate::Facets { count: f.len() })
        }
        n => {
            if p.degenerate {
                return (f64::NEG_INFINITY, InnerCertificate::Degenerate);
            }
            let seed = 0x5eed;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut best = f64::INFINITY;
            for _ in 0..SAMPLED_DIRECTIONS {
                let u: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
                let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
                let h = rows
                    .iter()
                    .map(|v| v.iter().zip(&u).map(|(a, b)| a * b).sum::<f64>())
                    .fold(f64::NEG_INFINITY, f64::max)
                    / norm;
                best = best.min(h);
            }
            (
                best,
                InnerCertificate::Sampled {
                    directions: SAMPLED_DIRECTIONS,
                    seed,
                },
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn centered_square() -> VPolytope {
        VPolytope::from_f64_rows(&[vec![-0.5, -0.5], vec![0.5, -0.5], vec![0.5, 0.5], vec![-0.5, 0.5]]).unwrap()
    }

    #[test]
    fn square_shells() {
        let sq = centered_square();
        assert!(shell_check(&sq, &ShellSpec::new(0.4, 0.8).unwrap()).ok);
        let c = shell_check(&sq, &ShellSpec::new(0.6, 0.8).unwrap());
        assert!(!c.ok && c.outer_ok && !c.inner_ok);
        assert!(!shell_check(&sq, &ShellSpec::new(0.4, 0.7).unwrap()).ok);
    }

    #[test]
    fn origin_outside_fails() {
        let off = VPolytope::from_f64_rows(&[vec![1.0, 1.0], vec![2.0, 1.0], vec![2.0, 2.0]]).unwrap();
        let c = shell_check(&off, &ShellSpec::new(0.1, 5.0).unwrap());
        assert!(c.min_facet_distance < 0.0 && !c.ok);
    }

    #[test]
    fn cube_in_three_and_four_dims() {
        let mut c3 = Vec::new();
        for i in 0..8 {
            c3.push((0..3).map(|b| if i >> b & 1 == 1 { 1.0 } else { -1.0 }).collect::<Vec<f64>>());
        }
        let p3 = VPolytope::from_f64_rows(&c3).unwrap();
        let r = shell_check(&p3, &ShellSpec::new(0.99, 1.75).unwrap());
        assert!(r.ok);
        assert_eq!(r.certificate, InnerCertificate::Facets { count: 6 });

        let mut c4 = Vec::new();
        for i in 0..16 {
            c4.push((0..4).map(|b| if i >> b & 1 == 1 { 1.0 } else { -1.0 }).collect::<Vec<f64>>());
        }
        let p4 = VPolytope::from_vertices_unchecked(crate::geom::point::PointSet::from_f64_rows(&c4).unwrap());
        let r = shell_check(&p4, &ShellSpec::new(0.99, 2.01).unwrap());
        assert!(r.ok);
        assert!(matches!(r.certificate, InnerCertificate::Sampled { .. }));
    }

    #[test]
    fn bad_radii_rejected() {
        assert!(ShellSpec::new(0.0, 1.0).is_err());
        assert!(ShellSpec::new(2.0, 1.0).is_err());
    }
}
