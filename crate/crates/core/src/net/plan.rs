use std::f64::consts::PI;

use num_bigint::BigUint;
use serde::Serialize;

use crate::net::enumerate::DEFAULT_GUARD_CAP;
use crate::net::spec::NetSpec;

#[derive(Clone, Debug, Serialize)]
pub struct PlanReport {
    pub n: usize,
    pub kappa: f64,
    pub outer: f64,
    /// Squared outer radius in lattice units, floored.
    pub radius_sq: u64,
    /// Lattice points of `κ·ℤⁿ` in the closed outer ball.
    pub lattice_points: BigUint,
    /// Exact count (`n <= 4`), otherwise a volume estimate.
    pub exact: bool,
    /// `2^lattice_points` bounds the number of lattice polytopes; reported as its exponent.
    pub subset_bound_log2: BigUint,
    pub guard_cap: usize,
    pub enumeration_refused: bool,
    /// Exact number of shell polygons, planar specs only.
    pub polygon_count: Option<BigUint>,
}

/// `table[m]` = number of `(a, b)` in `ℤ²` with `a² + b² <= m`.
fn two_square_prefix(max: u64) -> Vec<u64> {
    let max = max as usize;
    let mut cnt = vec![0u64; max + 1];
    let r = (max as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        let a2 = (a * a) as usize;
        if a2 > max {
            continue;
        }
        for b in -r..=r {
            let s = a2 + (b * b) as usize;
            if s <= max {
                cnt[s] += 1;
            }
        }
    }
    for m in 1..=max {
        cnt[m] += cnt[m - 1];
    }
    cnt
}

fn isqrt(m: u64) -> u64 {
    let mut r = (m as f64).sqrt() as u64;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r
}

/// Number of `z ∈ ℤⁿ` with `|z|² <= m`, exact for `n <= 4`.
pub fn lattice_ball_count(n: usize, m: u64) -> Option<BigUint> {
    let r = isqrt(m) as i64;
    match n {
        1 => Some(BigUint::from(2 * r as u64 + 1)),
        2 => Some(BigUint::from(two_square_prefix(m)[m as usize])),
        3 => {
            let t = two_square_prefix(m);
            Some((-r..=r).map(|z| BigUint::from(t[(m - (z * z) as u64) as usize])).sum())
        }
        4 => {
            let t = two_square_prefix(m);
            let mut total = BigUint::from(0u32);
            for z1 in -r..=r {
                let rest = m - (z1 * z1) as u64;
                let r2 = isqrt(rest) as i64;
                let mut row = 0u64;
                for z2 in -r2..=r2 {
                    row += t[(rest - (z2 * z2) as u64) as usize];
                }
                total += BigUint::from(row);
            }
            Some(total)
        }
        _ => None,
    }
}

/// Volume of the unit ball in dimension `n`.
fn unit_ball_volume(n: usize) -> f64 {
    let mut v = [1.0, 2.0];
    let mut cur = if n == 0 { 1.0 } else { 2.0 };
    for k in 2..=n {
        cur = v[0] * 2.0 * PI / k as f64;
        v = [v[1], cur];
    }
    cur
}

/// Counts the lattice points of `κ·ℤⁿ` in the outer ball without enumerating polytopes.
pub fn plan_report(spec: &NetSpec) -> PlanReport {
    let kappa = spec.kappa.to_f64();
    let rl = spec.outer / kappa;
    let radius_sq = (rl * rl * (1.0 + 1e-12)).floor() as u64;
    let (lattice_points, exact) = match lattice_ball_count(spec.n, radius_sq) {
        Some(c) => (c, true),
        None => (BigUint::from((unit_ball_volume(spec.n) * rl.powi(spec.n as i32)).round() as u128), false),
    };
    let annulus = if spec.n == 2 {
        crate::net::enumerate::shell_points(spec).map(|(_, a)| a).unwrap_or(usize::MAX)
    } else {
        usize::MAX
    };
    PlanReport {
        n: spec.n,
        kappa,
        outer: spec.outer,
        radius_sq,
        subset_bound_log2: lattice_points.clone(),
        lattice_points,
        exact,
        guard_cap: DEFAULT_GUARD_CAP,
        enumeration_refused: annulus > DEFAULT_GUARD_CAP,
        polygon_count: if spec.n == 2 { crate::net::enumerate::count_2d(spec).ok() } else { None },
    }
}
