//! Set families as 0/1 points: overlap classes and b of the embedded set.
use borsuk::geom::diameter;
use borsuk::geom::Metric;
use borsuk::larman::{embed, verify_larman_borsuk_equivalence, SetFamily};

fn main() -> borsuk::Result<()> {
    // All 2-subsets of {1..4}: pairs overlap in 0 or 1 element.
    let members: Vec<Vec<usize>> = (1..=4).flat_map(|a| (a + 1..=4).map(move |b| vec![a, b])).collect();
    let f = SetFamily::new(4, 2, &members)?;
    let x = embed(&f)?;
    println!(
        "{} points in dimension {}, diameter² = {}",
        x.len(),
        x.dim(),
        diameter(&x, Metric::Euclidean).gauge
    );
    let e = verify_larman_borsuk_equivalence(&f, 0, 100_000)?;
    println!("ell = {:?}, b = {:?}, equal: {:?}", e.ell, e.b, e.holds);
    Ok(())
}
