//! Four pieces of diameter below 1 for a width-1 truncated octahedron.
use borsuk::geom::Metric;
use borsuk::partition::SearchParams;
use borsuk::width::octahedron::{default_cut_depths, OCTA_DEFAULT_BUDGET, OCTA_STRETCH};
use borsuk::width::{octahedron_four_partition, truncated_octahedron};

fn main() -> borsuk::Result<()> {
    let p = truncated_octahedron(default_cut_depths())?;
    println!("{} vertices, diameter {:.6}", p.len(), p.diameter(Metric::Euclidean).value);
    let params = SearchParams {
        budget: OCTA_DEFAULT_BUDGET,
        ..SearchParams::default()
    };
    let r = octahedron_four_partition(&p, OCTA_STRETCH, &params)?;
    println!(
        "best max piece diameter {:.6} after {} evaluations ({})",
        r.max_diameter,
        r.evaluations,
        r.best.as_ref().map_or("none", |b| b.pattern.as_str())
    );
    println!("below 1: {}, at most {OCTA_STRETCH}: {}", r.primary_met, r.stretch_met);
    Ok(())
}
