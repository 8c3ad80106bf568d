use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::polytope::VPolytope;
use crate::partition::verify::{power_search_3d, PowerSeed, SearchParams, VerifyOutcome};
use crate::partition::PartitionResult;

/// Half the vertex-to-vertex distance of the regular octahedron whose
/// opposite facets are 1 apart: the facet plane `x+y+z = a` is at distance `a/√3 = 1/2`.
pub fn octahedron_radius() -> f64 {
    3f64.sqrt() / 2.0
}

/// Regular octahedron of width 1 with the corners at `+a·e_i` cut off by
/// the planes `x_i = a - t_i`.
///
/// Adjacent cuts must not overlap along the shared edge, which requires
/// `t_i + t_j <= a`.
pub fn truncated_octahedron(cut_depths: [f64; 3]) -> Result<VPolytope> {
    let a = octahedron_radius();
    for (i, &t) in cut_depths.iter().enumerate() {
        if !(0.0..a).contains(&t) {
            return Err(Error::InvalidArgument(format!("cut depth t{i} = {t} outside [0, {a})")));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if cut_depths[i] + cut_depths[j] > a + 1e-12 {
                return Err(Error::InvalidArgument(format!("cuts {i} and {j} overlap: t{i} + t{j} > {a}")));
            }
        }
    }
    let mut rows = Vec::new();
    for i in 0..3 {
        let t = cut_depths[i];
        if t == 0.0 {
            let mut v = vec![0.0; 3];
            v[i] = a;
            rows.push(v);
            continue;
        }
        for j in (0..3).filter(|&j| j != i) {
            for s in [1.0, -1.0] {
                let mut v = vec![0.0; 3];
                v[i] = a - t;
                v[j] = s * t;
                rows.push(v);
            }
        }
    }
    for i in 0..3 {
        let mut v = vec![0.0; 3];
        v[i] = -a;
        rows.push(v);
    }
    VPolytope::from_f64_rows(&rows)
}

/// The cuts that put the three base squares on the planes `x_i = 1/2`.
pub fn default_cut_depths() -> [f64; 3] {
    let t = octahedron_radius() - 0.5;
    [t, t, t]
}

#[derive(Clone, Debug, Serialize)]
pub struct OctaReport {
    pub best: Option<PartitionResult>,
    pub max_diameter: f64,
    pub evaluations: u64,
    /// Best piece diameter below 1.
    pub primary_met: bool,
    pub stretch_target: f64,
    pub stretch_met: bool,
}

/// Seeds invariant under the cyclic permutation of the axes, which is a
/// symmetry of the truncated octahedron with equal cuts.
pub fn symmetric_seeds(count: usize, seed: u64) -> Vec<PowerSeed> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (al, be, ga) = (rng.random_range(-0.6..0.6), rng.random_range(-0.6..0.6), rng.random_range(-0.6..0.6));
            let w = rng.random_range(-0.1..0.1);
            let sites = vec![vec![al, be, be], vec![be, al, be], vec![be, be, al], vec![ga, ga, ga]];
            (sites, vec![0.0, 0.0, 0.0, w])
        })
        .collect()
}

pub const OCTA_DEFAULT_BUDGET: u64 = 120_000;
pub const OCTA_STRETCH: f64 = 0.9887;

/// Four-piece partition search on a truncated octahedron.
///
/// Stops early once the stretch target is reached; `primary_met` reports
/// whether the best piece diameter is below 1.
pub fn octahedron_four_partition(p: &VPolytope, stretch: f64, params: &SearchParams) -> Result<OctaReport> {
    let seeds = symmetric_seeds(16, params.seed);
    let out = power_search_3d(p, 4, &seeds, stretch, params)?;
    let evaluations = out.evaluations();
    let best = match out {
        VerifyOutcome::Verified { witness, .. } => Some(witness),
        VerifyOutcome::Exhausted { best, .. } => best,
    };
    let max_diameter = best.as_ref().map_or(f64::INFINITY, |b| b.max_part_diameter());
    Ok(OctaReport {
        max_diameter,
        evaluations,
        primary_met: max_diameter < 1.0,
        stretch_target: stretch,
        stretch_met: max_diameter <= stretch,
        best,
    })
}
