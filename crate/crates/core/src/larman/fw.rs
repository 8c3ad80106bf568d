use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{max_clique, Graph};
use crate::larman::family::{elements_of, k_subsets, overlap, SetFamily};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut c = BigUint::from(1u32);
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma2Report {
    pub p: usize,
    pub size: usize,
    pub bound: BigUint,
    /// A pair overlapping in exactly `p - 1` elements, if any.
    pub violation: Option<(Vec<usize>, Vec<usize>)>,
    /// `size <= bound`; only asserted when no pair violates the overlap rule.
    pub within_bound: Option<bool>,
}

/// A family of `(2p-1)`-subsets of `{1..n}` with no overlap of exactly
/// `p - 1` has at most `C(n, p-1)` members.
pub fn fw_lemma2_check(f: &SetFamily, p: usize) -> Result<Lemma2Report> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if f.h() != 2 * p - 1 {
        return Err(Error::InvalidArgument(format!(
            "members must have 2p-1 = {} elements, got {}",
            2 * p - 1,
            f.h()
        )));
    }
    let m = f.masks();
    let mut violation = None;
    'outer: for i in 0..m.len() {
        for j in i + 1..m.len() {
            if overlap(m[i], m[j]) == p - 1 {
                violation = Some((elements_of(m[i]), elements_of(m[j])));
                break 'outer;
            }
        }
    }
    let bound = binomial(f.ground_n(), p - 1);
    let within_bound = violation.is_none().then(|| BigUint::from(f.len()) <= bound);
    Ok(Lemma2Report {
        p,
        size: f.len(),
        bound,
        violation,
        within_bound,
    })
}

/// Largest family of `h`-subsets of `{1..n}` with no pairwise overlap equal to `forbidden`.
pub fn max_family_avoiding(n: usize, h: usize, forbidden: usize, budget: u64) -> (Vec<u128>, bool) {
    let subs = k_subsets(n, h);
    let mut g = Graph::new(subs.len());
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if overlap(subs[i], subs[j]) != forbidden {
                g.add_edge(i, j);
            }
        }
    }
    let (clique, exact) = max_clique(&g, budget);
    (clique.iter().map(|&i| subs[i]).collect(), exact)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma3Report {
    pub p: usize,
    /// Largest family found; `None` in bound-only mode.
    pub m_found: Option<usize>,
    /// The search finished, so `m_found` is the maximum.
    pub exact: bool,
    pub bound: BigUint,
    pub within_bound: Option<bool>,
    pub witness: Vec<Vec<usize>>,
}

/// Families of `2p`-subsets of `{1..4p}` with no overlap of exactly `p`
/// have at most `½·C(4p, p)` members. Exact search for `p <= 2`, bound only beyond.
pub fn fw_lemma3_search(p: usize, budget: u64) -> Result<Lemma3Report> {
    if p == 0 || (p > 1 && !is_prime(p)) {
        return Err(Error::InvalidArgument(format!("p = {p} must be 1 or a prime")));
    }
    let bound = binomial(4 * p, p) / BigUint::from(2u32);
    if p > 2 {
        return Ok(Lemma3Report {
            p,
            m_found: None,
            exact: false,
            bound,
            within_bound: None,
            witness: Vec::new(),
        });
    }
    let (fam, exact) = max_family_avoiding(4 * p, 2 * p, p, budget);
    Ok(Lemma3Report {
        p,
        m_found: Some(fam.len()),
        exact,
        within_bound: Some(BigUint::from(fam.len()) <= bound),
        bound,
        witness: fam.into_iter().map(elements_of).collect(),
    })
}
