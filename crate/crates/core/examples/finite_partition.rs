//! Optimal m-part partitions of a finite set, with a JSON witness.
use borsuk::geom::PointSet;
use borsuk::partition::{f_m_finite, witness, FiniteOptions};

fn main() -> borsuk::Result<()> {
    // Vertices of a regular pentagon.
    let rows: Vec<Vec<f64>> = (0..5)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            vec![t.cos(), t.sin()]
        })
        .collect();
    let x = PointSet::from_f64_rows(&rows)?;
    for m in 2..=5 {
        let r = f_m_finite(&x, m, &FiniteOptions::default())?;
        println!("f_{m} = {:.6}  parts {:?}", r.theta().unwrap_or(f64::NAN), r.best().assignment);
    }
    let best = f_m_finite(&x, 3, &FiniteOptions::default())?;
    println!("{}", witness::to_json(best.best()));
    Ok(())
}
