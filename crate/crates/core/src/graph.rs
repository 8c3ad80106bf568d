//! Undirected graphs on bitset adjacency, with exact coloring and clique search.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> BitSet {
        let mut b = BitSet::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    pub fn and_not(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
            len: self.len,
        }
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph { adj: vec![BitSet::new(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self-loop");
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in self.adj[a].iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n() && self.edges().iter().all(|&(a, b)| colors[a] != colors[b])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ColorOutcome {
    Colorable(Vec<usize>),
    NotColorable,
    /// The node budget ran out before a decision.
    Unknown,
}

struct Dsatur<'g> {
    g: &'g Graph,
    m: usize,
    colors: Vec<usize>,
    /// counts[v * m + c]: neighbors of v colored c.
    counts: Vec<u32>,
    sat: Vec<usize>,
    degree: Vec<usize>,
    nodes: u64,
    budget: u64,
}

const NONE: usize = usize::MAX;

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for u in self.g.neighbors(v).iter() {
            let k = u * self.m + c;
            self.counts[k] += 1;
            if self.counts[k] == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = NONE;
        for u in self.g.neighbors(v).iter() {
            let k = u * self.m + c;
            self.counts[k] -= 1;
            if self.counts[k] == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    /// Highest saturation, then highest degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != NONE {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) if (self.sat[v], self.degree[v]) > (self.sat[b], self.degree[b]) => Some(v),
                keep => keep,
            };
        }
        best
    }

    /// Ok(true) colored, Ok(false) impossible, Err(()) budget exhausted.
    fn search(&mut self, used: usize) -> Result<bool, ()> {
        let Some(v) = self.pick() else { return Ok(true) };
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if self.sat[v] >= self.m {
            return Ok(false);
        }
        let limit = (used + 1).min(self.m);
        for c in 0..limit {
            if self.counts[v * self.m + c] == 0 {
                self.assign(v, c);
                let r = self.search(used.max(c + 1));
                if !matches!(r, Ok(false)) {
                    if r.is_err() {
                        self.unassign(v, c);
                    }
                    return r;
                }
                self.unassign(v, c);
            }
        }
        Ok(false)
    }
}

/// Exact decision of m-colorability by DSATUR branch and bound.
///
/// A greedy clique is precolored, which both prunes (clique larger than `m`)
/// and breaks color symmetry. `budget` bounds the number of search nodes.
pub fn color_with(g: &Graph, m: usize, budget: u64) -> ColorOutcome {
    color_with_counted(g, m, budget).0
}

/// As [`color_with`], also returning the number of search nodes used.
pub fn color_with_counted(g: &Graph, m: usize, budget: u64) -> (ColorOutcome, u64) {
    let n = g.n();
    if n == 0 {
        return (ColorOutcome::Colorable(Vec::new()), 0);
    }
    if m == 0 {
        return (ColorOutcome::NotColorable, 0);
    }
    if budget == 0 {
        return (ColorOutcome::Unknown, 0);
    }
    let clique = greedy_clique(g);
    if clique.len() > m {
        return (ColorOutcome::NotColorable, 0);
    }
    let mut st = Dsatur {
        g,
        m,
        colors: vec![NONE; n],
        counts: vec![0; n * m],
        sat: vec![0; n],
        degree: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        budget,
    };
    for (c, &v) in clique.iter().enumerate() {
        st.assign(v, c);
    }
    let out = match st.search(clique.len()) {
        Ok(true) => {
            let colors = st.colors.clone();
            assert!(g.is_proper_coloring(&colors), "coloring search returned an improper coloring");
            ColorOutcome::Colorable(colors)
        }
        Ok(false) => ColorOutcome::NotColorable,
        Err(()) => ColorOutcome::Unknown,
    };
    (out, st.nodes)
}

/// Plain DSATUR without backtracking; an upper bound on the chromatic number.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let m = n.max(1);
    let mut st = Dsatur {
        g,
        m,
        colors: vec![NONE; n],
        counts: vec![0; n * m],
        sat: vec![0; n],
        degree: (0..n).map(|v| g.degree(v)).collect(),
        nodes: 0,
        budget: u64::MAX,
    };
    while let Some(v) = st.pick() {
        let c = (0..m).find(|&c| st.counts[v * m + c] == 0).unwrap();
        st.assign(v, c);
    }
    st.colors
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chromatic {
    pub lower: usize,
    pub upper: usize,
    /// A proper coloring with `upper` colors.
    pub coloring: Vec<usize>,
}

impl Chromatic {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.upper)
    }
}

pub fn chromatic_number(g: &Graph, budget: u64) -> Chromatic {
    let n = g.n();
    if n == 0 {
        return Chromatic {
            lower: 0,
            upper: 0,
            coloring: Vec::new(),
        };
    }
    let mut coloring = dsatur_greedy(g);
    let mut upper = coloring.iter().max().map_or(0, |c| c + 1);
    let (clique, _) = max_clique(g, budget);
    let mut lower = clique.len().max(1);
    let mut spent = 0u64;
    while lower < upper {
        let (outcome, used) = color_with_counted(g, lower, budget.saturating_sub(spent));
        spent += used;
        match outcome {
            ColorOutcome::Colorable(c) => {
                upper = lower;
                coloring = c;
            }
            ColorOutcome::NotColorable => lower += 1,
            ColorOutcome::Unknown => break,
        }
    }
    Chromatic { lower, upper, coloring }
}

/// Greedy clique from the best of all starting vertices.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand = g.neighbors(start).clone();
        while !cand.is_empty() {
            let v = cand
                .iter()
                .max_by_key(|&v| (g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(v);
            cand = cand.and(g.neighbors(v));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

/// Maximum clique by branch and bound with greedy-coloring bounds.
/// Returns the clique and whether the search completed within `budget` nodes.
pub fn max_clique(g: &Graph, budget: u64) -> (Vec<usize>, bool) {
    struct S<'g> {
        g: &'g Graph,
        best: Vec<usize>,
        nodes: u64,
        budget: u64,
    }
    fn color_order(g: &Graph, p: &BitSet) -> Vec<(usize, usize)> {
        // (vertex, color bound) in nondecreasing color order
        let mut uncolored = p.clone();
        let mut out = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            loop {
                let Some(v) = avail.iter().next() else { break };
                out.push((v, color));
                uncolored.remove(v);
                avail.remove(v);
                avail = avail.and_not(g.neighbors(v));
            }
        }
        out
    }
    fn expand(s: &mut S, r: &mut Vec<usize>, mut p: BitSet) -> bool {
        s.nodes += 1;
        if s.nodes > s.budget {
            return false;
        }
        let order = color_order(s.g, &p);
        for &(v, c) in order.iter().rev() {
            if r.len() + c <= s.best.len() {
                return true;
            }
            r.push(v);
            let np = p.and(s.g.neighbors(v));
            if np.is_empty() {
                if r.len() > s.best.len() {
                    s.best = r.clone();
                }
            } else if !expand(s, r, np) {
                r.pop();
                return false;
            }
            r.pop();
            p.remove(v);
        }
        true
    }
    let n = g.n();
    let mut s = S {
        g,
        best: greedy_clique(g),
        nodes: 0,
        budget,
    };
    if n == 0 {
        return (Vec::new(), true);
    }
    let done = expand(&mut s, &mut Vec::new(), BitSet::full(n));
    let mut best = s.best;
    best.sort_unstable();
    (best, done)
}

/// All maximal cliques (Bron–Kerbosch with Tomita pivoting), each sorted.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn bk(g: &Graph, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p.iter().chain(x.iter()).max_by_key(|&u| p.intersection_count(g.neighbors(u))).unwrap();
        let cand: Vec<usize> = p.and_not(g.neighbors(pivot)).iter().collect();
        for v in cand {
            r.push(v);
            bk(g, r, p.and(g.neighbors(v)), x.and(g.neighbors(v)), out);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    bk(g, &mut Vec::new(), BitSet::full(n), BitSet::new(n), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e)
    }

    #[test]
    fn complete_graphs() {
        let k5 = Graph::complete(5);
        assert_eq!(color_with(&k5, 4, 1_000), ColorOutcome::NotColorable);
        assert!(matches!(color_with(&k5, 5, 1_000), ColorOutcome::Colorable(_)));
        assert_eq!(chromatic_number(&k5, 1_000).value(), Some(5));
    }

    #[test]
    fn odd_cycles_and_petersen() {
        assert_eq!(chromatic_number(&cycle(7), 10_000).value(), Some(3));
        assert_eq!(chromatic_number(&cycle(8), 10_000).value(), Some(2));
        let p = petersen();
        assert_eq!(chromatic_number(&p, 10_000).value(), Some(3));
        assert_eq!(max_clique(&p, 10_000), (vec![0, 1], true));
    }

    #[test]
    fn budget_gives_unknown() {
        assert_eq!(color_with(&petersen(), 3, 0), ColorOutcome::Unknown);
    }

    #[test]
    fn maximal_cliques_of_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let g = Graph::new(3);
        assert_eq!(maximal_cliques(&g), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn bitset_ops() {
        let mut b = BitSet::new(130);
        b.insert(0);
        b.insert(64);
        b.insert(129);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(b.count(), 3);
        b.remove(64);
        assert!(!b.contains(64));
    }
}
