use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::net::lattice::{canonical_d4, disk_points, hull_2d_int, polygon_in_shell, LatticePolytope};
use crate::net::spec::NetSpec;

/// Default cap on lattice points in the annulus before enumeration refuses.
pub const DEFAULT_GUARD_CAP: usize = 64;

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    /// Polygons in canonical order; one per symmetry orbit when reduced.
    pub polytopes: Vec<LatticePolytope>,
    /// Orbit size of each polygon (all 1 when not reduced).
    pub orbit_sizes: Vec<usize>,
    pub symmetry_reduced: bool,
    pub disk_points: usize,
    pub annulus_points: usize,
}

impl Enumeration {
    /// Number of polygons before symmetry reduction.
    pub fn full_count(&self) -> usize {
        self.orbit_sizes.iter().sum()
    }
}

/// Lattice points (in lattice units) of the outer disk, and how many of them
/// lie outside the inner disk.
pub fn shell_points(spec: &NetSpec) -> Result<(Vec<[i64; 2]>, usize)> {
    let sh = spec.lattice_shell()?;
    let pts = disk_points(sh.r_outer);
    let inner2 = sh.r_inner * sh.r_inner * (1.0 - 1e-12);
    let annulus = pts.iter().filter(|v| ((v[0] * v[0] + v[1] * v[1]) as f64) > inner2).count();
    Ok((pts, annulus))
}

fn estimate_text(spec: &NetSpec, annulus: usize) -> String {
    match count_2d(spec) {
        Ok(c) => format!("the shell holds exactly {c} lattice polygons"),
        Err(_) => format!("the search space has up to 2^{annulus} vertex subsets"),
    }
}

fn cross(a: [i64; 2], b: [i64; 2]) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn upper_half(d: [i64; 2]) -> bool {
    d[1] > 0 || (d[1] == 0 && d[0] > 0)
}

/// Exact number of lattice polygons `enumerate_2d` would produce without
/// symmetry reduction, computed without listing them.
///
/// Each polygon is counted once from its lowest (then leftmost) vertex by
/// walking admissible edges in increasing direction angle. Edges sharing a
/// direction are applied together so that collinear points never become
/// vertices.
pub fn count_2d(spec: &NetSpec) -> Result<BigUint> {
    if spec.n != 2 {
        return Err(Error::InvalidArgument(format!("planar count needs n = 2, got {}", spec.n)));
    }
    let sh = spec.lattice_shell()?;
    let (pts, _) = shell_points(spec)?;
    let i2 = sh.r_inner * sh.r_inner * (1.0 - 1e-12);
    let mut edges: Vec<([i64; 2], usize, usize)> = Vec::new();
    for (i, &a) in pts.iter().enumerate() {
        for (j, &b) in pts.iter().enumerate() {
            let d = [b[0] - a[0], b[1] - a[1]];
            let c = cross(a, b);
            if i != j && c > 0 && (c as f64) * (c as f64) >= i2 * ((d[0] * d[0] + d[1] * d[1]) as f64) {
                edges.push((d, i, j));
            }
        }
    }
    edges.sort_by(|x, y| upper_half(y.0).cmp(&upper_half(x.0)).then_with(|| 0.cmp(&cross(x.0, y.0))));
    let mut groups: Vec<&[([i64; 2], usize, usize)]> = Vec::new();
    let mut start = 0;
    for k in 1..=edges.len() {
        if k == edges.len() || upper_half(edges[k].0) != upper_half(edges[start].0) || cross(edges[k].0, edges[start].0) != 0 {
            groups.push(&edges[start..k]);
            start = k;
        }
    }
    // Lowest-then-leftmost order of the points.
    let rank = |i: usize| (pts[i][1], pts[i][0]);
    let mut total = BigUint::ZERO;
    let mut cnt: Vec<BigUint> = vec![BigUint::ZERO; pts.len()];
    let mut pending: Vec<(usize, BigUint)> = Vec::new();
    for s in 0..pts.len() {
        cnt.iter_mut().for_each(|c| *c = BigUint::ZERO);
        cnt[s] = BigUint::from(1u32);
        for g in &groups {
            for &(_, a, b) in g.iter() {
                if cnt[a] != BigUint::ZERO && rank(b) >= rank(s) {
                    if b == s {
                        total += &cnt[a];
                    } else {
                        pending.push((b, cnt[a].clone()));
                    }
                }
            }
            for (b, v) in pending.drain(..) {
                cnt[b] += v;
            }
        }
    }
    Ok(total)
}

type State = Vec<u64>;

fn words(len: usize) -> usize {
    len.div_ceil(64)
}

/// All lattice polygons `P` with `inner·B ⊆ P ⊆ outer·B`, found by deleting
/// hull vertices one at a time from the hull of the outer disk's lattice points.
///
/// A state is the set of lattice points of `P`. Deleting a hull vertex keeps
/// the state lattice-convex, and every valid polygon is reached: between
/// it and the full hull, some hull vertex lies outside it, and every
/// intermediate hull contains it and so passes the shell test.
pub fn enumerate_2d(spec: &NetSpec, symmetry_reduce: bool, guard_cap: usize) -> Result<Enumeration> {
    if spec.n != 2 {
        return Err(Error::InvalidArgument(format!("planar enumeration needs n = 2, got {}", spec.n)));
    }
    let (pts, annulus) = shell_points(spec)?;
    if annulus > guard_cap {
        return Err(Error::GuardExceeded {
            points: annulus,
            cap: guard_cap,
            estimate: estimate_text(spec, annulus),
        });
    }
    let sh = spec.lattice_shell()?;
    let mut out = Enumeration {
        polytopes: Vec::new(),
        orbit_sizes: Vec::new(),
        symmetry_reduced: symmetry_reduce,
        disk_points: pts.len(),
        annulus_points: annulus,
    };
    let w = words(pts.len());
    let members = |s: &State| -> Vec<[i64; 2]> { (0..pts.len()).filter(|&i| s[i / 64] >> (i % 64) & 1 == 1).map(|i| pts[i]).collect() };
    let index = |v: [i64; 2]| pts.binary_search(&v).expect("lattice point of the disk");
    let key = |hull: &[[i64; 2]]| -> (Vec<[i64; 2]>, usize) {
        if symmetry_reduce {
            canonical_d4(hull)
        } else {
            let mut h = hull.to_vec();
            h.sort();
            (h, 1)
        }
    };
    let mut full: State = vec![0; w];
    for i in 0..pts.len() {
        full[i / 64] |= 1 << (i % 64);
    }
    let root = hull_2d_int(&pts);
    if !polygon_in_shell(&root, sh.r_inner, sh.r_outer) {
        return Ok(out);
    }
    let mut seen: HashSet<Vec<[i64; 2]>> = HashSet::new();
    let mut found: Vec<(Vec<[i64; 2]>, usize)> = Vec::new();
    let (k0, o0) = key(&root);
    seen.insert(k0.clone());
    found.push((k0, o0));
    let mut stack: Vec<(State, Vec<[i64; 2]>)> = vec![(full, root)];
    while let Some((state, hull)) = stack.pop() {
        for &v in &hull {
            let mut child = state.clone();
            let i = index(v);
            child[i / 64] &= !(1 << (i % 64));
            let ch = hull_2d_int(&members(&child));
            if !polygon_in_shell(&ch, sh.r_inner, sh.r_outer) {
                continue;
            }
            let (k, orbit) = key(&ch);
            if seen.insert(k.clone()) {
                found.push((k, orbit));
                // Continue from the canonical representative's own state.
                let rep_state = if symmetry_reduce {
                    state_of(&found.last().unwrap().0, &pts, w)
                } else {
                    child
                };
                let rep_hull = if symmetry_reduce { hull_2d_int(&found.last().unwrap().0) } else { ch };
                stack.push((rep_state, rep_hull));
            }
        }
    }
    found.sort();
    for (k, orbit) in found {
        out.polytopes.push(LatticePolytope::new(k.iter().map(|v| v.to_vec()).collect()));
        out.orbit_sizes.push(orbit);
    }
    Ok(out)
}

/// Lattice points of the disk lying in the hull of `vertices`.
fn state_of(vertices: &[[i64; 2]], pts: &[[i64; 2]], w: usize) -> State {
    let hull = hull_2d_int(vertices);
    let n = hull.len();
    let mut s = vec![0u64; w];
    for (i, &p) in pts.iter().enumerate() {
        let inside = (0..n).all(|j| {
            let (a, b) = (hull[j], hull[(j + 1) % n]);
            (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) >= 0
        });
        if inside {
            s[i / 64] |= 1 << (i % 64);
        }
    }
    s
}
