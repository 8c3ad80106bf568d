//! Planar oracles shared by the integration tests.
#![allow(dead_code)]

pub fn seg_dist(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0)
    };
    ((p[0] - a[0] - t * dx).powi(2) + (p[1] - a[1] - t * dy).powi(2)).sqrt()
}

/// Counterclockwise hull by gift wrapping, deliberately unrelated to the library's.
pub fn wrap(pts: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let start = (0..pts.len()).min_by(|&i, &j| pts[i].partial_cmp(&pts[j]).unwrap()).unwrap();
    let mut hull = vec![];
    let mut cur = start;
    loop {
        hull.push(pts[cur]);
        let mut next = (cur + 1) % pts.len();
        for j in 0..pts.len() {
            let o = pts[cur];
            let c = (pts[next][0] - o[0]) * (pts[j][1] - o[1]) - (pts[next][1] - o[1]) * (pts[j][0] - o[0]);
            let far = (pts[j][0] - o[0]).hypot(pts[j][1] - o[1]) > (pts[next][0] - o[0]).hypot(pts[next][1] - o[1]);
            if c < -1e-14 || (c.abs() <= 1e-14 && far) {
                next = j;
            }
        }
        cur = next;
        if cur == start || hull.len() > pts.len() {
            return hull;
        }
    }
}

pub fn dist_to_polygon(p: [f64; 2], poly: &[[f64; 2]]) -> f64 {
    let n = poly.len();
    if n == 1 {
        return seg_dist(p, poly[0], poly[0]);
    }
    let inside = n >= 3
        && (0..n).all(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) >= -1e-12
        });
    if inside {
        return 0.0;
    }
    (0..n).map(|i| seg_dist(p, poly[i], poly[(i + 1) % n])).fold(f64::INFINITY, f64::min)
}

/// Hausdorff distance of two convex polygons; attained at a vertex of one of them.
pub fn polygon_hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    let one = |x: &[[f64; 2]], y: &[[f64; 2]]| x.iter().map(|&p| dist_to_polygon(p, y)).fold(0.0, f64::max);
    one(a, b).max(one(b, a))
}
