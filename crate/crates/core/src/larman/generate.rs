use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{maximal_cliques, Graph};
use crate::larman::family::{k_subsets, overlap, SetFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    /// Every maximal family with pairwise overlaps at least `k`.
    Exhaustive,
    /// `count` random families, reproducible from `seed`.
    Random { seed: u64, count: usize },
}

fn compat_graph(subs: &[u128], k: usize) -> Graph {
    let mut g = Graph::new(subs.len());
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if overlap(subs[i], subs[j]) >= k {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Families of `h`-subsets of `{1..n}` whose members pairwise overlap in at
/// least `k` elements. Infeasible parameters give no families.
pub fn generate_admissible_families(n: usize, h: usize, k: usize, mode: GenMode) -> Vec<SetFamily> {
    if k > h || h > n || n == 0 || n > 128 {
        return Vec::new();
    }
    let subs = k_subsets(n, h);
    let g = compat_graph(&subs, k);
    let build = |idx: &[usize]| {
        let mut masks: Vec<u128> = idx.iter().map(|&i| subs[i]).collect();
        masks.sort_unstable();
        SetFamily::from_masks(n, h, masks).expect("distinct h-subsets")
    };
    match mode {
        GenMode::Exhaustive => {
            let mut out: Vec<SetFamily> = maximal_cliques(&g).iter().map(|c| build(c)).collect();
            out.sort_by(|a, b| a.masks().cmp(b.masks()));
            out
        }
        GenMode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..subs.len()).collect();
            (0..count)
                .map(|_| {
                    order.shuffle(&mut rng);
                    let cap = rng.random_range(1..=subs.len());
                    let mut chosen: Vec<usize> = Vec::new();
                    for &v in &order {
                        if chosen.len() == cap {
                            break;
                        }
                        if chosen.iter().all(|&c| g.has_edge(c, v)) {
                            chosen.push(v);
                        }
                    }
                    build(&chosen)
                })
                .collect()
        }
    }
}

/// Every admissible family (not only maximal ones): all cliques of the
/// compatibility graph. Only feasible for very small parameters.
pub fn all_admissible_families(n: usize, h: usize, k: usize) -> Vec<SetFamily> {
    if k > h || h > n || n == 0 {
        return Vec::new();
    }
    let subs = k_subsets(n, h);
    let g = compat_graph(&subs, k);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(g: &Graph, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for v in start..g.n() {
            if cur.iter().all(|&c| g.has_edge(c, v)) {
                cur.push(v);
                out.push(cur.clone());
                rec(g, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&g, 0, &mut cur, &mut out);
    out.iter()
        .map(|c| SetFamily::from_masks(n, h, c.iter().map(|&i| subs[i]).collect()).expect("distinct"))
        .collect()
}
