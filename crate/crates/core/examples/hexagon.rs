//! Three pieces of diameter at most √3/2 for any planar set of diameter 1.
//!
//! Pass a path to write an SVG of the last partition.
use borsuk::geom::VPolytope;
use borsuk::partition::witness::render_svg;
use borsuk::width::{hexagon_max_sq_diameter_exact, three_partition_unit_diameter};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> borsuk::Result<()> {
    let d2 = hexagon_max_sq_diameter_exact(&BigRational::from_integer(1.into()));
    println!("width-1 hexagon: largest piece has squared diameter {d2}");

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut last = None;
    for trial in 0..5 {
        let rows: Vec<Vec<f64>> = (0..12).map(|_| vec![rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)]).collect();
        let p = VPolytope::from_f64_rows(&rows)?;
        let d = p.diameter(borsuk::geom::Metric::Euclidean).value;
        let p = VPolytope::from_f64_rows(&rows.iter().map(|r| vec![r[0] / d, r[1] / d]).collect::<Vec<_>>())?;
        let (pose, r) = three_partition_unit_diameter(&p, 1e-10)?;
        println!("polygon {trial}: hexagon at {:.4} rad, piece diameters {:.4?}", pose.angle, r.part_diameters);
        last = Some((pose, r));
    }
    if let (Some(path), Some((pose, r))) = (std::env::args().nth(1), last) {
        std::fs::write(&path, render_svg(&r, Some(&pose.hexagon.rows()))?).expect("write svg");
        println!("wrote {path}");
    }
    Ok(())
}
