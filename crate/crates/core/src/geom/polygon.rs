//! Convex polygon helpers on float coordinates (counterclockwise vertex cycles).

use crate::geom::hrep::HalfSpace;

pub type Polygon = Vec<[f64; 2]>;

pub fn to_polygon(rows: &[Vec<f64>]) -> Polygon {
    rows.iter().map(|r| [r[0], r[1]]).collect()
}

pub fn to_rows(poly: &Polygon) -> Vec<Vec<f64>> {
    poly.iter().map(|p| p.to_vec()).collect()
}

pub fn area(poly: &Polygon) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    (0..n)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum::<f64>()
        * 0.5
}

/// Area centroid; vertex mean for degenerate polygons.
pub fn centroid(poly: &Polygon) -> [f64; 2] {
    let a = area(poly);
    let n = poly.len();
    if a.abs() < 1e-14 || n < 3 {
        let k = n.max(1) as f64;
        let sx: f64 = poly.iter().map(|p| p[0]).sum();
        let sy: f64 = poly.iter().map(|p| p[1]).sum();
        return [sx / k, sy / k];
    }
    let (mut cx, mut cy) = (0.0, 0.0);
    for i in 0..n {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        let c = p[0] * q[1] - q[0] * p[1];
        cx += (p[0] + q[0]) * c;
        cy += (p[1] + q[1]) * c;
    }
    [cx / (6.0 * a), cy / (6.0 * a)]
}

/// Sutherland–Hodgman clip of a convex polygon by `h.eval(x) <= 0`.
pub fn clip(poly: &Polygon, h: &HalfSpace) -> Polygon {
    let n = poly.len();
    if n == 0 {
        return Vec::new();
    }
    let eval = |p: &[f64; 2]| h.normal[0] * p[0] + h.normal[1] * p[1] - h.offset;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (cur, nxt) = (poly[i], poly[(i + 1) % n]);
        let (fc, fn_) = (eval(&cur), eval(&nxt));
        if fc <= 0.0 {
            out.push(cur);
        }
        if (fc < 0.0 && fn_ > 0.0) || (fc > 0.0 && fn_ < 0.0) {
            let t = fc / (fc - fn_);
            out.push([cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])]);
        }
        if n == 1 {
            break;
        }
    }
    dedup_cycle(out)
}

fn dedup_cycle(mut poly: Polygon) -> Polygon {
    poly.dedup_by(|a, b| (a[0] - b[0]).abs() < 1e-13 && (a[1] - b[1]).abs() < 1e-13);
    while poly.len() > 1 {
        let (f, l) = (poly[0], poly[poly.len() - 1]);
        if (f[0] - l[0]).abs() < 1e-13 && (f[1] - l[1]).abs() < 1e-13 {
            poly.pop();
        } else {
            break;
        }
    }
    poly
}

pub fn diameter(poly: &Polygon) -> f64 {
    let mut best = 0.0f64;
    for i in 0..poly.len() {
        for j in i + 1..poly.len() {
            let (dx, dy) = (poly[i][0] - poly[j][0], poly[i][1] - poly[j][1]);
            best = best.max(dx * dx + dy * dy);
        }
    }
    best.sqrt()
}

/// Diameter of a union of polygons (max over all vertex pairs).
pub fn union_diameter(polys: &[Polygon]) -> f64 {
    let all: Polygon = polys.iter().flatten().copied().collect();
    diameter(&all)
}

pub fn support(poly: &Polygon, u: [f64; 2]) -> f64 {
    poly.iter().map(|p| p[0] * u[0] + p[1] * u[1]).fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_square_in_half() {
        let sq: Polygon = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        let h = HalfSpace::new(vec![1.0, 0.0], 0.5).unwrap();
        let half = clip(&sq, &h);
        assert_eq!(half.len(), 4);
        assert!((area(&half) - 0.5).abs() < 1e-15);
        assert_eq!(centroid(&sq), [0.5, 0.5]);
    }

    #[test]
    fn clip_segment() {
        let seg: Polygon = vec![[0.0, 0.0], [1.0, 0.0]];
        let h = HalfSpace::new(vec![1.0, 0.0], 0.5).unwrap();
        let piece = clip(&seg, &h);
        assert!((diameter(&piece) - 0.5).abs() < 1e-15);
    }
}
