//! Reuleaux polygons: width constancy and the in/circumradius identity r + R = w.
use borsuk::width::{eggleston_check, insphere_circumsphere_2d, reuleaux_polygon, width_constancy};

fn main() -> borsuk::Result<()> {
    for k in [3, 5, 7] {
        let body = reuleaux_polygon(k, 1.0, 256)?;
        let (lo, hi) = width_constancy(&body.polygon, 720)?;
        let ic = insphere_circumsphere_2d(&body.polygon)?;
        let e = eggleston_check(2, ic.r, ic.big_r, Some(ic.center_gap()), 1e-4);
        println!(
            "k={k}: widths in [{lo:.6}, {hi:.6}], r = {:.6}, R = {:.6}, r + R = {:.6}, tight: {} {}",
            ic.r,
            ic.big_r,
            ic.r + ic.big_r,
            e.inner_tight,
            e.outer_tight
        );
    }
    Ok(())
}
