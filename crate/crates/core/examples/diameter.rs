//! Diameters under different metrics, and the smallest number of smaller pieces.
use borsuk::geom::{diameter, Metric, PointSet};
use borsuk::partition::{b_finite, FiniteOptions};

fn main() -> borsuk::Result<()> {
    // Unit square corners plus its center.
    let x = PointSet::from_i64_rows(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])?;
    for metric in [Metric::Euclidean, Metric::lp(1.0)?, Metric::lp(f64::INFINITY)?] {
        let d = diameter(&x, metric);
        let b = b_finite(
            &x,
            &FiniteOptions {
                metric,
                ..FiniteOptions::default()
            },
        )?;
        println!("{metric:>8}: d = {:.6}, witness {:?}, b = {:?}", d.value, d.witness, b.value());
    }
    Ok(())
}
