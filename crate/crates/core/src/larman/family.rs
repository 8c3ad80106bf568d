use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::point::{Point, PointSet};

/// Largest ground set supported by the `u128` member representation.
pub const MAX_GROUND: usize = 128;

/// A uniform family of distinct `h`-subsets of `{1..n}`, stored as bitmasks
/// (element `e` is bit `e - 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground_n: usize,
    h: usize,
    members: Vec<u128>,
}

pub fn mask_of(elements: &[usize]) -> u128 {
    elements.iter().fold(0u128, |m, &e| m | 1u128 << (e - 1))
}

pub fn elements_of(mask: u128) -> Vec<usize> {
    (0..128).filter(|&b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

pub fn overlap(a: u128, b: u128) -> usize {
    (a & b).count_ones() as usize
}

/// All `h`-subsets of `{1..n}` in lexicographic order of their element lists.
pub fn k_subsets(n: usize, h: usize) -> Vec<u128> {
    let mut out = Vec::new();
    if h > n || n > MAX_GROUND {
        return out;
    }
    let mut idx: Vec<usize> = (1..=h).collect();
    loop {
        out.push(mask_of(&idx));
        let mut i = h;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - (h - 1 - i) {
                idx[i] += 1;
                for j in i + 1..h {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

impl SetFamily {
    pub fn new(ground_n: usize, h: usize, members: &[Vec<usize>]) -> Result<SetFamily> {
        if ground_n == 0 || ground_n > MAX_GROUND {
            return Err(Error::InvalidArgument(format!("ground set size must be in 1..={MAX_GROUND}")));
        }
        let mut masks = Vec::with_capacity(members.len());
        for m in members {
            if let Some(&e) = m.iter().find(|&&e| e == 0 || e > ground_n) {
                return Err(Error::InvalidArgument(format!("element {e} outside 1..={ground_n}")));
            }
            let mask = mask_of(m);
            if mask.count_ones() as usize != h || m.len() != h {
                return Err(Error::InvalidArgument(format!("member {m:?} does not have exactly {h} distinct elements")));
            }
            masks.push(mask);
        }
        SetFamily::from_masks(ground_n, h, masks)
    }

    pub fn from_masks(ground_n: usize, h: usize, members: Vec<u128>) -> Result<SetFamily> {
        if ground_n > MAX_GROUND || (ground_n < MAX_GROUND && members.iter().any(|&m| m >> ground_n != 0)) {
            return Err(Error::InvalidArgument("member outside the ground set".into()));
        }
        if members.iter().any(|m| m.count_ones() as usize != h) {
            return Err(Error::InvalidArgument(format!("members must have exactly {h} elements")));
        }
        let mut seen = std::collections::HashSet::new();
        if !members.iter().all(|m| seen.insert(*m)) {
            return Err(Error::InvalidArgument("duplicate member".into()));
        }
        Ok(SetFamily { ground_n, h, members })
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn masks(&self) -> &[u128] {
        &self.members
    }

    pub fn member(&self, i: usize) -> Vec<usize> {
        elements_of(self.members[i])
    }

    /// Smallest pairwise overlap, `None` for fewer than two members.
    pub fn min_overlap(&self) -> Option<usize> {
        let m = &self.members;
        (0..m.len()).flat_map(|i| (i + 1..m.len()).map(move |j| overlap(m[i], m[j]))).min()
    }

    /// Checks that every pair of members shares at least `k` elements.
    pub fn check_overlap_at_least(&self, k: usize) -> Result<()> {
        let m = &self.members;
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if overlap(m[i], m[j]) < k {
                    return Err(Error::Hypothesis(format!(
                        "members {:?} and {:?} overlap in {} < {k} elements",
                        elements_of(m[i]),
                        elements_of(m[j]),
                        overlap(m[i], m[j])
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Characteristic 0/1 vectors in dimension `n`, with exact integer coordinates.
pub fn embed(f: &SetFamily) -> Result<PointSet> {
    if f.is_empty() {
        return Err(Error::Empty);
    }
    let pts = f
        .masks()
        .iter()
        .map(|&m| Point::from_i64(&(0..f.ground_n()).map(|b| (m >> b & 1) as i64).collect::<Vec<_>>()))
        .collect();
    PointSet::new(pts)
}

/// Parses the family format: a header `n=<n> h=<h>`, then one member per line.
pub fn parse_family(text: &str, source: &str) -> Result<SetFamily> {
    let err = |line: usize, msg: String| Error::Parse {
        file: source.to_string(),
        line,
        msg,
    };
    let mut header: Option<(usize, usize)> = None;
    let mut members = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((n, h)) = header else {
            let mut n = None;
            let mut h = None;
            for tok in line.split_whitespace() {
                match tok.split_once('=') {
                    Some(("n", v)) => n = v.parse::<usize>().ok(),
                    Some(("h", v)) => h = v.parse::<usize>().ok(),
                    _ => return Err(err(i + 1, format!("bad header token '{tok}', expected n=<n> h=<h>"))),
                }
            }
            match (n, h) {
                (Some(n), Some(h)) => header = Some((n, h)),
                _ => return Err(err(i + 1, "header must be 'n=<n> h=<h>'".into())),
            }
            continue;
        };
        let mut m = Vec::new();
        for tok in line.split_whitespace() {
            let e: usize = tok.parse().map_err(|_| err(i + 1, format!("not an element: '{tok}'")))?;
            if e == 0 || e > n {
                return Err(err(i + 1, format!("element {e} outside 1..={n}")));
            }
            m.push(e);
        }
        if m.len() != h || mask_of(&m).count_ones() as usize != h {
            return Err(err(i + 1, format!("member must have {h} distinct elements")));
        }
        members.push(m);
    }
    let (n, h) = header.ok_or_else(|| err(0, "missing header 'n=<n> h=<h>'".into()))?;
    SetFamily::new(n, h, &members).map_err(|e| err(0, e.to_string()))
}

pub fn read_family(path: &Path) -> Result<SetFamily> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        file: path.display().to_string(),
        line: 0,
        msg: e.to_string(),
    })?;
    parse_family(&text, &path.display().to_string())
}

pub fn format_family(f: &SetFamily) -> String {
    let mut s = format!("n={} h={}\n", f.ground_n(), f.h());
    for i in 0..f.len() {
        let m: Vec<String> = f.member(i).iter().map(|e| e.to_string()).collect();
        let _ = writeln!(s, "{}", m.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::metric::{diameter, Metric};
    use crate::scalar::Scalar;

    #[test]
    fn overlaps_and_embedding() {
        let f = SetFamily::new(3, 2, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(overlap(f.masks()[0], f.masks()[1]), 1);
        assert_eq!(overlap(f.masks()[0], f.masks()[0]), 2);
        let x = embed(&f).unwrap();
        assert_eq!(x.get(0).coords, vec![Scalar::int(1), Scalar::int(1), Scalar::int(0)]);
        let d = diameter(&x, Metric::Euclidean);
        assert_eq!(d.gauge, Scalar::int(2));
    }

    #[test]
    fn subsets_counted() {
        assert_eq!(k_subsets(5, 2).len(), 10);
        assert_eq!(k_subsets(8, 4).len(), 70);
        assert_eq!(k_subsets(3, 0), vec![0]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(elements_of(k_subsets(4, 2)[0]), vec![1, 2]);
    }

    #[test]
    fn invalid_members() {
        assert!(SetFamily::new(3, 2, &[vec![1, 4]]).is_err());
        assert!(SetFamily::new(3, 2, &[vec![1, 1]]).is_err());
        assert!(SetFamily::new(3, 2, &[vec![1, 2], vec![2, 1]]).is_err());
    }

    #[test]
    fn file_round_trip() {
        let f = SetFamily::new(4, 2, &[vec![1, 2], vec![3, 4]]).unwrap();
        let text = format_family(&f);
        assert_eq!(parse_family(&text, "f.txt").unwrap(), f);
        let e = parse_family("n=3 h=2\n1 2\n1 9\n", "bad.txt").unwrap_err();
        assert_eq!(e.to_string(), "bad.txt:3: element 9 outside 1..=3");
    }
}
