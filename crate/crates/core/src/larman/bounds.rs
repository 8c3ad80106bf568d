use serde::Serialize;

/// Known bounds on `b` in dimension `n`. All but `kahn_kalai` are upper
/// bounds valid for every set; `kahn_kalai` is the lower bound attained by
/// some set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub danzer: f64,
    pub lassak: f64,
    /// Uses the natural logarithm.
    pub schramm: f64,
    pub kahn_kalai: f64,
    pub trivial: f64,
}

pub fn danzer(n: usize) -> f64 {
    let n = n as f64;
    (0.5 * (3.0 * (n + 2.0).ln() + (n - 1.0) * (2.0 + 2f64.sqrt()).ln() - 3f64.ln())).exp()
}

pub fn lassak(n: usize) -> f64 {
    2f64.powi(n as i32 - 1) + 1.0
}

pub fn schramm(n: usize) -> f64 {
    let n = n as f64;
    5.0 * n.powf(1.5) * (4.0 + n.ln()) * 1.5f64.powf(n / 2.0)
}

pub fn kahn_kalai(n: usize) -> f64 {
    1.07f64.powf((n as f64).sqrt())
}

pub fn bounds_table(n: usize) -> BoundsRecord {
    BoundsRecord {
        n,
        danzer: danzer(n),
        lassak: lassak(n),
        schramm: schramm(n),
        kahn_kalai: kahn_kalai(n),
        trivial: n as f64 + 1.0,
    }
}

/// Aligned text table of bound records.
pub fn format_bounds(rows: &[BoundsRecord]) -> String {
    let mut s = format!(
        "{:>6} {:>14} {:>14} {:>14} {:>14} {:>8}\n",
        "n", "danzer", "lassak", "schramm", "kahn_kalai", "n+1"
    );
    for r in rows {
        s.push_str(&format!(
            "{:>6} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6} {:>8}\n",
            r.n,
            r.danzer,
            r.lassak,
            r.schramm,
            r.kahn_kalai,
            r.n + 1
        ));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Crossover {
    /// Smallest `n` with `1.07^√n > n + 1`.
    pub n: usize,
    /// `√n·ln 1.07 - ln(n+1)` at `n - 1` and at `n`.
    pub margin_before: f64,
    pub margin_at: f64,
    /// The comparison switches sign exactly once on the checked grid.
    pub grid_monotone: bool,
    pub grid_points: usize,
}

fn margin(n: usize) -> f64 {
    let x = n as f64;
    x.sqrt() * 1.07f64.ln() - (x + 1.0).ln()
}

/// Scans `n = 1, 2, ...` for the first `n` with `1.07^√n > n + 1`, in logs.
///
/// The margin is decreasing below `n = (2/ln 1.07)^2` and increasing
/// after it, so past that point the first positive value is the crossover.
pub fn kk_crossover() -> Crossover {
    let mut n = 1;
    while margin(n) <= 0.0 {
        n += 1;
    }
    let grid_points = 1000;
    let hi = 2 * n;
    let mut changes = 0;
    let mut prev = margin(1) > 0.0;
    for i in 1..=grid_points {
        let m = 1 + (hi - 1) * i / grid_points;
        let s = margin(m) > 0.0;
        if s != prev {
            changes += 1;
        }
        prev = s;
    }
    Crossover {
        n,
        margin_before: margin(n - 1),
        margin_at: margin(n),
        grid_monotone: changes == 1,
        grid_points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(lassak(3), 5.0);
        assert_eq!(lassak(1), 2.0);
        assert!((danzer(1) - (27.0f64 / 3.0).sqrt()).abs() < 1e-12);
        assert!((kahn_kalai(100) - 1.07f64.powi(10)).abs() < 1e-12);
        assert!(kahn_kalai(100) < 101.0);
    }

    #[test]
    fn crossover_window() {
        let c = kk_crossover();
        assert!(c.n >= 10_000 && c.n <= 21_801, "{c:?}");
        assert!(c.margin_before <= 0.0 && c.margin_at > 0.0);
        assert!(c.grid_monotone);
    }
}
