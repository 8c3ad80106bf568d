//! f_m moves by at most twice the Hausdorff distance between two sets.
use borsuk::geom::PointSet;
use borsuk::partition::check_continuity;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> borsuk::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for m in 2..=4 {
        let a: Vec<Vec<f64>> = (0..9).map(|_| vec![rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)]).collect();
        let b: Vec<Vec<f64>> = a
            .iter()
            .map(|r| vec![r[0] + rng.random_range(-0.05..0.05), r[1] + rng.random_range(-0.05..0.05)])
            .collect();
        let c = check_continuity(&PointSet::from_f64_rows(&a)?, &PointSet::from_f64_rows(&b)?, m)?;
        println!("m={m}: f = {:.5} vs {:.5}, ε = {:.5}, |Δ| <= 2ε: {}", c.f1, c.f2, c.epsilon, c.bound_ok);
    }
    Ok(())
}
