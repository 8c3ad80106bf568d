use serde::Serialize;

use crate::error::Result;
use crate::graph::{chromatic_number, Graph};
use crate::larman::family::{embed, overlap, SetFamily};
use crate::partition::finite::{b_finite, FiniteOptions};

/// Members joined when they overlap in exactly `k` elements.
#[derive(Clone, Debug)]
pub struct OverlapGraph {
    pub k: usize,
    pub graph: Graph,
}

impl OverlapGraph {
    pub fn new(f: &SetFamily, k: usize) -> OverlapGraph {
        let m = f.masks();
        let mut graph = Graph::new(m.len());
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if overlap(m[i], m[j]) == k {
                    graph.add_edge(i, j);
                }
            }
        }
        OverlapGraph { k, graph }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ell {
    pub lower: usize,
    pub upper: usize,
    /// Subfamily index of each member; inside a class all overlaps exceed `k`.
    pub classes: Vec<usize>,
}

impl Ell {
    pub fn value(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

/// Fewest subfamilies whose members pairwise overlap in at least `k + 1`
/// elements, for a family whose members pairwise overlap in at least `k`.
pub fn ell(f: &SetFamily, k: usize, budget: u64) -> Result<Ell> {
    f.check_overlap_at_least(k)?;
    let g = OverlapGraph::new(f, k);
    let chi = chromatic_number(&g.graph, budget);
    Ok(Ell {
        lower: chi.lower,
        upper: chi.upper,
        classes: chi.coloring,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Equivalence {
    /// Some pair overlaps in exactly `k`, so the embedded diameter is `√(2(h-k))`.
    pub premise_met: bool,
    pub b: (usize, usize),
    pub ell: (usize, usize),
    /// Both sides exact and equal; `None` when the premise fails or a budget ran out.
    pub holds: Option<bool>,
}

/// Compares `b` of the embedded points with `ℓ(𝒜, n, k)`.
pub fn verify_larman_borsuk_equivalence(f: &SetFamily, k: usize, budget: u64) -> Result<Equivalence> {
    let l = ell(f, k, budget)?;
    if f.len() == 1 {
        return Ok(Equivalence {
            premise_met: true,
            b: (1, 1),
            ell: (l.lower, l.upper),
            holds: Some(l.value() == Some(1)),
        });
    }
    let premise_met = f.min_overlap() == Some(k);
    let x = embed(f)?;
    let opts = FiniteOptions {
        budget,
        ..FiniteOptions::default()
    };
    let b = b_finite(&x, &opts)?;
    let holds = match (premise_met, b.value(), l.value()) {
        (true, Some(bv), Some(lv)) => Some(bv == lv),
        _ => None,
    };
    Ok(Equivalence {
        premise_met,
        b: (b.lower, b.upper),
        ell: (l.lower, l.upper),
        holds,
    })
}
