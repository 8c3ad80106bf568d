use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::polygon;
use crate::geom::polytope::{convex_hull_2d, VPolytope};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InCircum {
    pub r: f64,
    pub big_r: f64,
    pub center_in: [f64; 2],
    pub center_out: [f64; 2],
}

impl InCircum {
    pub fn center_gap(&self) -> f64 {
        let (a, b) = (self.center_in, self.center_out);
        ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
    }
}

type Circle = ([f64; 2], f64);

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

fn circle2(a: [f64; 2], b: [f64; 2]) -> Circle {
    let c = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
    (c, dist(a, c))
}

fn circle3(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Option<Circle> {
    let (bx, by) = (b[0] - a[0], b[1] - a[1]);
    let (cx, cy) = (c[0] - a[0], c[1] - a[1]);
    let d = 2.0 * (bx * cy - by * cx);
    if d.abs() < 1e-300 {
        return None;
    }
    let (b2, c2) = (bx * bx + by * by, cx * cx + cy * cy);
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = [a[0] + ux, a[1] + uy];
    Some((center, (ux * ux + uy * uy).sqrt()))
}

fn inside(c: &Circle, p: [f64; 2]) -> bool {
    dist(c.0, p) <= c.1 * (1.0 + 1e-12) + 1e-15
}

/// Smallest enclosing circle, incremental with move-to-front restarts.
pub fn min_enclosing_circle(pts: &[[f64; 2]]) -> Circle {
    let mut c: Circle = (pts[0], 0.0);
    for i in 1..pts.len() {
        if inside(&c, pts[i]) {
            continue;
        }
        c = (pts[i], 0.0);
        for j in 0..i {
            if inside(&c, pts[j]) {
                continue;
            }
            c = circle2(pts[i], pts[j]);
            for k in 0..j {
                if !inside(&c, pts[k]) {
                    c = circle3(pts[i], pts[j], pts[k]).unwrap_or_else(|| {
                        // Collinear: the farthest pair spans the circle.
                        let cands = [circle2(pts[i], pts[j]), circle2(pts[i], pts[k]), circle2(pts[j], pts[k])];
                        cands.into_iter().fold(cands[0], |a, b| if b.1 > a.1 { b } else { a })
                    });
                }
            }
        }
    }
    c
}

/// Ternary search for the maximum of a concave function on `[lo, hi]`.
fn argmax_concave(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..90 {
        let (a, b) = (lo + (hi - lo) / 3.0, hi - (hi - lo) / 3.0);
        if f(a) < f(b) {
            lo = a;
        } else {
            hi = b;
        }
    }
    0.5 * (lo + hi)
}

/// Circumradius by the minimum enclosing circle. Inradius as the maximum of
/// the distance to the nearest edge line, a concave function, by nested
/// ternary searches.
pub fn insphere_circumsphere_2d(p: &VPolytope) -> Result<InCircum> {
    let hull = convex_hull_2d(p.vertices())?;
    if hull.degenerate {
        return Err(Error::Degenerate("polygon has empty interior".into()));
    }
    let poly = polygon::to_polygon(&hull.polytope.rows());
    let mut shuffled = poly.clone();
    shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(0));
    let (center_out, big_r) = min_enclosing_circle(&shuffled);
    let n = poly.len();
    // Counterclockwise order: the interior lies to the left of each edge.
    let lines: Vec<[f64; 3]> = (0..n)
        .filter_map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            let (nx, ny) = (a[1] - b[1], b[0] - a[0]);
            let len = (nx * nx + ny * ny).sqrt();
            (len > 0.0).then(|| [nx / len, ny / len, -(nx * a[0] + ny * a[1]) / len])
        })
        .collect();
    let depth = |x: f64, y: f64| lines.iter().map(|l| l[0] * x + l[1] * y + l[2]).fold(f64::INFINITY, f64::min);
    let (x0, x1) = poly.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v[0]), b.max(v[0])));
    let (y0, y1) = poly.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v[1]), b.max(v[1])));
    let best_y = |x: f64| argmax_concave(y0, y1, |y| depth(x, y));
    let x = argmax_concave(x0, x1, |x| depth(x, best_y(x)));
    let y = best_y(x);
    Ok(InCircum {
        r: depth(x, y).max(0.0),
        big_r,
        center_in: [x, y],
        center_out,
    })
}

/// The Eggleston bounds `1 - b <= r <= R <= b` with `b = √(n/(2n+2))`, for width 1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EgglestonCheck {
    pub n: usize,
    pub r: f64,
    pub big_r: f64,
    pub bound: f64,
    pub center_gap: Option<f64>,
    pub ok: bool,
    pub inner_tight: bool,
    pub outer_tight: bool,
}

pub fn eggleston_bound(n: usize) -> f64 {
    let n = n as f64;
    (n / (2.0 * n + 2.0)).sqrt()
}

pub fn eggleston_check(n: usize, r: f64, big_r: f64, center_gap: Option<f64>, tol: f64) -> EgglestonCheck {
    let bound = eggleston_bound(n);
    let ok = 1.0 - bound <= r + tol && r <= big_r + tol && big_r <= bound + tol && center_gap.is_none_or(|g| g <= tol);
    EgglestonCheck {
        n,
        r,
        big_r,
        bound,
        center_gap,
        ok,
        inner_tight: (r - (1.0 - bound)).abs() <= tol,
        outer_tight: (big_r - bound).abs() <= tol,
    }
}
