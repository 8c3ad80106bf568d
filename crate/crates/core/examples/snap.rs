//! Snapping a body to the lattice of a net and measuring how far it moved.
use borsuk::geom::VPolytope;
use borsuk::net::{snap, NetSpec};
use borsuk::width::regular_polygon;
use borsuk::Scalar;

fn main() -> borsuk::Result<()> {
    let body: VPolytope = regular_polygon(9, 1.2, 0.3)?;
    for kappa in [Scalar::ratio(1, 5), Scalar::ratio(1, 10), Scalar::ratio(1, 20)] {
        let spec = NetSpec::with_kappa(2, Scalar::ratio(95, 100), kappa.clone())?;
        let r = snap(&body, &spec)?;
        println!(
            "κ = {kappa}: {} lattice vertices, moved {:.5} (bound {:.5})",
            r.polytope.vertices.len(),
            r.hausdorff,
            r.bound
        );
    }
    Ok(())
}
