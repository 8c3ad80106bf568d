//! Search for partitions witnessing `f_m(P) <= alpha`.
//!
//! A failed search only means the budget ran out; it proves nothing about
//! `f_m(P)`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::polygon;
use crate::geom::polytope::VPolytope;
use crate::partition::patterns::{cut_tree_on, power_on, Body, CutTree};
use crate::partition::{fan_partition_2d, PartitionResult};
use crate::width::hexagon::three_partition_unit_diameter;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    /// Pattern evaluations allowed.
    pub budget: u64,
    pub seed: u64,
    /// Local-search steps per random restart (3D).
    pub restart_steps: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            budget: 20_000,
            seed: 0,
            restart_steps: 300,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum VerifyOutcome {
    Verified {
        witness: PartitionResult,
        evaluations: u64,
    },
    /// Budget spent without reaching the target.
    Exhausted {
        best: Option<PartitionResult>,
        evaluations: u64,
    },
}

impl VerifyOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, VerifyOutcome::Verified { .. })
    }

    pub fn best(&self) -> Option<&PartitionResult> {
        match self {
            VerifyOutcome::Verified { witness, .. } => Some(witness),
            VerifyOutcome::Exhausted { best, .. } => best.as_ref(),
        }
    }

    pub fn best_theta(&self) -> Option<f64> {
        self.best().map(|r| r.theta)
    }

    pub fn evaluations(&self) -> u64 {
        match self {
            VerifyOutcome::Verified { evaluations, .. } | VerifyOutcome::Exhausted { evaluations, .. } => *evaluations,
        }
    }
}

struct Tracker {
    best: Option<PartitionResult>,
    evals: u64,
    budget: u64,
    target: f64,
}

impl Tracker {
    fn offer(&mut self, r: PartitionResult) -> bool {
        self.evals += 1;
        let better = self.best.as_ref().is_none_or(|b| r.theta < b.theta);
        if better {
            self.best = Some(r);
        }
        better
    }

    fn done(&self) -> bool {
        self.evals >= self.budget || self.best.as_ref().is_some_and(|b| b.theta <= self.target)
    }

    fn finish(self) -> VerifyOutcome {
        match self.best {
            Some(b) if b.theta <= self.target => VerifyOutcome::Verified {
                witness: b,
                evaluations: self.evals,
            },
            best => VerifyOutcome::Exhausted { best, evaluations: self.evals },
        }
    }
}

/// Looks for an `m`-piece partition of `p` with `theta <= alpha`.
///
/// In the plane the search starts from the hexagon embedding (for `m = 3`),
/// then tries rotated equal fans and refines angles and center by coordinate
/// descent. In space it runs seeded local search over power diagrams and
/// tries axis cut trees. Dimensions above 3 are unsupported.
pub fn verify_f_bound(p: &VPolytope, m: usize, alpha: f64, params: &SearchParams) -> Result<VerifyOutcome> {
    if !(alpha < 1.0) {
        return Err(Error::InvalidArgument(format!("alpha must be below 1, got {alpha}")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let mut tr = Tracker {
        best: None,
        evals: 0,
        budget: params.budget,
        target: alpha,
    };
    if params.budget == 0 {
        return Ok(tr.finish());
    }
    let body = Body::from_polytope(p)?;
    match &body {
        Body::Polygon(poly) => search_2d(p, poly, m, &mut tr)?,
        Body::Polytope3d { .. } => {
            search_3d(&body, m, &[], params, &mut tr)?;
        }
    }
    Ok(tr.finish())
}

fn fan_on(body_p: &VPolytope, angles: &[f64], center: [f64; 2]) -> Option<PartitionResult> {
    fan_partition_2d(body_p, angles.len(), angles, Some(center)).ok()
}

fn search_2d(p: &VPolytope, poly: &polygon::Polygon, m: usize, tr: &mut Tracker) -> Result<()> {
    // Bodies in the line are lifted to the x-axis.
    let p2 = if p.dim() == 1 {
        VPolytope::from_f64_rows(&polygon::to_rows(poly))?
    } else {
        p.clone()
    };
    let d = polygon::diameter(poly);
    if d == 0.0 {
        let r = fan_partition_2d(&p2, 1, &[0.0], None)?;
        let mut r = r;
        r.m = m;
        r.part_diameters.resize(m, 0.0);
        r.pieces.resize(m, Default::default());
        tr.offer(r);
        return Ok(());
    }
    let mut seeds: Vec<(Vec<f64>, [f64; 2])> = Vec::new();
    if m == 3 {
        let unit: Vec<Vec<f64>> = polygon::to_rows(poly).iter().map(|v| vec![v[0] / d, v[1] / d]).collect();
        if let Ok((pose, _)) = VPolytope::from_f64_rows(&unit).and_then(|u| three_partition_unit_diameter(&u, 1e-9)) {
            let a = pose.angle;
            seeds.push((vec![a, a + 2.0 * PI / 3.0, a + 4.0 * PI / 3.0], [pose.center[0] * d, pose.center[1] * d]));
        }
    }
    let c = polygon::centroid(poly);
    let step = 2.0 * PI / m as f64;
    for r in 0..36 {
        let off = step * r as f64 / 36.0 + 0.1234;
        seeds.push(((0..m).map(|k| off + step * k as f64).collect(), c));
    }
    let mut best_seed: Option<(f64, Vec<f64>, [f64; 2])> = None;
    for (angles, center) in seeds {
        if tr.done() {
            return Ok(());
        }
        if let Some(r) = fan_on(&p2, &angles, center) {
            let th = r.theta;
            tr.offer(r);
            if best_seed.as_ref().is_none_or(|b| th < b.0) {
                best_seed = Some((th, angles, center));
            }
        }
    }
    let Some((mut cur, mut angles, mut center)) = best_seed else { return Ok(()) };
    let mut h = step / 8.0;
    while !tr.done() && h > 1e-7 {
        let mut improved = false;
        for coord in 0..m + 2 {
            for sgn in [1.0, -1.0] {
                if tr.done() {
                    return Ok(());
                }
                let (mut a2, mut c2) = (angles.clone(), center);
                if coord < m {
                    a2[coord] += sgn * h;
                } else {
                    c2[coord - m] += sgn * h * d / PI;
                }
                if a2.windows(2).any(|w| w[1] <= w[0]) || a2[m - 1] - a2[0] >= 2.0 * PI {
                    continue;
                }
                if let Some(r) = fan_on(&p2, &a2, c2) {
                    let th = r.theta;
                    tr.offer(r);
                    if th < cur - 1e-15 {
                        cur = th;
                        angles = a2;
                        center = c2;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    Ok(())
}

/// A power-diagram configuration: sites and weights.
pub type PowerSeed = (Vec<Vec<f64>>, Vec<f64>);

fn local_power_search(body: &Body, seed: PowerSeed, steps: usize, scale: f64, rng: &mut ChaCha8Rng) -> (Option<PartitionResult>, u64) {
    let (mut sites, mut weights) = seed;
    let mut evals = 1u64;
    let Ok(mut cur) = power_on(body, &sites, &weights) else {
        return (None, evals);
    };
    let mut step = 0.15 * scale;
    for _ in 0..steps {
        let s2: Vec<Vec<f64>> = sites
            .iter()
            .map(|s| s.iter().map(|v| v + step * rng.sample::<f64, _>(StandardNormal)).collect())
            .collect();
        let w2: Vec<f64> = weights.iter().map(|w| w + 0.3 * step * scale * rng.sample::<f64, _>(StandardNormal)).collect();
        evals += 1;
        match power_on(body, &s2, &w2) {
            Ok(r) if r.theta < cur.theta => {
                cur = r;
                sites = s2;
                weights = w2;
            }
            _ => step *= 0.98,
        }
    }
    (Some(cur), evals)
}

/// Random-restart local search over `m`-site power diagrams, after trying
/// `seeds` and axis cut trees. Restarts run in fixed-size parallel batches,
/// so results do not depend on the thread count.
fn search_3d(body: &Body, m: usize, seeds: &[PowerSeed], params: &SearchParams, tr: &mut Tracker) -> Result<()> {
    let c = body.center();
    let d = body.diameter();
    if d == 0.0 {
        return Ok(());
    }
    if m.is_power_of_two() && m <= 8 {
        let k = m.trailing_zeros() as usize;
        for shift in 0..3 {
            let mut o = c.clone();
            let tree = axis_tree(&mut o, k, shift);
            if let Ok(r) = cut_tree_on(body, &tree) {
                tr.offer(r);
            }
            if tr.done() || k == 0 || k == 3 {
                break;
            }
        }
    }
    let steps = params.restart_steps.max(1);
    let mut restart = 0u64;
    const BATCH: u64 = 8;
    while !tr.done() {
        let jobs: Vec<u64> = (restart..restart + BATCH).collect();
        restart += BATCH;
        let results: Vec<(Option<PartitionResult>, u64)> = jobs
            .par_iter()
            .map(|&j| {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ j);
                let seed = match seeds.get(j as usize) {
                    Some(s) => s.clone(),
                    None => {
                        let sites = (0..m)
                            .map(|_| c.iter().map(|v| v + 0.3 * d * rng.sample::<f64, _>(StandardNormal)).collect())
                            .collect();
                        (sites, vec![0.0; m])
                    }
                };
                local_power_search(body, seed, steps, d, &mut rng)
            })
            .collect();
        for (r, e) in results {
            tr.evals += e.saturating_sub(1);
            if let Some(r) = r {
                tr.offer(r);
            } else {
                tr.evals += 1;
            }
        }
    }
    Ok(())
}

fn axis_tree(o: &mut [f64], k: usize, shift: usize) -> CutTree {
    fn build(o: &[f64], axes: &[usize], label: usize) -> CutTree {
        match axes.split_first() {
            None => CutTree::Leaf(label),
            Some((&a, rest)) => {
                let mut n = vec![0.0; o.len()];
                n[a] = 1.0;
                CutTree::split(n, o[a], build(o, rest, 2 * label), build(o, rest, 2 * label + 1))
            }
        }
    }
    let axes: Vec<usize> = (0..k).map(|i| (i + shift) % 3).collect();
    build(o, &axes, 0)
}

/// Best power-diagram partition of a 3D body, stopping once the largest
/// piece diameter drops to `stop_below`.
pub fn power_search_3d(p: &VPolytope, m: usize, seeds: &[PowerSeed], stop_below: f64, params: &SearchParams) -> Result<VerifyOutcome> {
    let body = Body::from_polytope(p)?;
    if body.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: p.dim() });
    }
    let mut tr = Tracker {
        best: None,
        evals: 0,
        budget: params.budget,
        target: stop_below / body.diameter(),
    };
    if params.budget > 0 {
        search_3d(&body, m, seeds, params, &mut tr)?;
    }
    Ok(tr.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_segment_halves() {
        let seg = VPolytope::from_f64_rows(&[vec![0.0], vec![1.0]]).unwrap();
        let out = verify_f_bound(&seg, 2, 0.51, &SearchParams::default()).unwrap();
        assert!(out.is_verified(), "{out:?}");
        assert!(out.best().unwrap().recheck_pieces(1e-12));
    }

    #[test]
    fn zero_budget_is_unknown() {
        let seg = VPolytope::from_f64_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let p = SearchParams {
            budget: 0,
            ..SearchParams::default()
        };
        let out = verify_f_bound(&seg, 3, 0.9, &p).unwrap();
        assert!(!out.is_verified());
        assert_eq!(out.evaluations(), 0);
    }

    #[test]
    fn alpha_one_rejected() {
        let seg = VPolytope::from_f64_rows(&[vec![0.0], vec![1.0]]).unwrap();
        assert!(verify_f_bound(&seg, 2, 1.0, &SearchParams::default()).is_err());
    }

    #[test]
    fn cube_eight_pieces() {
        let mut v = Vec::new();
        for x in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for z in [0.0, 1.0] {
                    v.push(vec![x, y, z]);
                }
            }
        }
        let cube = VPolytope::from_f64_rows(&v).unwrap();
        let out = verify_f_bound(&cube, 8, 0.51, &SearchParams::default()).unwrap();
        assert!(out.is_verified());
    }
}
