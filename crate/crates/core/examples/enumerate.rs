//! Lattice polygons between two disks, with and without symmetry reduction.
use borsuk::net::{count_2d, enumerate_2d, NetSpec};
use borsuk::Scalar;

fn main() -> borsuk::Result<()> {
    let spec = NetSpec::with_shell(2, Scalar::ratio(9, 10), Scalar::int(1), 1.5, 3.2)?;
    let full = enumerate_2d(&spec, false, 64)?;
    let reduced = enumerate_2d(&spec, true, 64)?;
    println!("{} lattice points, {} in the annulus", full.disk_points, full.annulus_points);
    println!(
        "{} polygons, {} up to symmetry, counted directly: {}",
        full.polytopes.len(),
        reduced.polytopes.len(),
        count_2d(&spec)?
    );
    for p in reduced.polytopes.iter().take(3) {
        println!("  {}", p.id());
    }

    let coarse = NetSpec::with_kappa(2, Scalar::ratio(95, 100), Scalar::ratio(1, 5))?;
    match enumerate_2d(&coarse, true, 64) {
        Err(e) => println!("κ = 1/5: {e}"),
        Ok(en) => println!("κ = 1/5: {} polygons", en.polytopes.len()),
    }
    Ok(())
}
