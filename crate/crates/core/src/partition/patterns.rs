//! Geometric partition patterns for polytopes.
//!
//! A pattern cuts a body into convex cells and groups cells into pieces. The
//! diameter of a piece is the largest distance between cell vertices, which
//! is exact because the diameter of a union of polytopes is attained at
//! vertices.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::hrep::{facets_3d, vertices_from_halfspaces_3d, HalfSpace};
use crate::geom::metric::diameter_f64;
use crate::geom::polygon::{self, Polygon};
use crate::geom::polytope::{affine_rank, convex_hull_2d, VPolytope};
use crate::partition::{PartitionResult, Piece};
use crate::scalar::TOL_GEOM;

/// A convex body prepared for cutting.
#[derive(Clone, Debug, PartialEq)]
pub enum Body {
    /// Counterclockwise polygon; two vertices for a segment. Bodies in the
    /// line are placed on the x-axis.
    Polygon(Polygon),
    Polytope3d {
        vertices: Vec<Vec<f64>>,
        facets: Vec<HalfSpace>,
    },
}

impl Body {
    pub fn from_polytope(p: &VPolytope) -> Result<Body> {
        match p.dim() {
            1 => {
                let xs: Vec<f64> = p.rows().iter().map(|r| r[0]).collect();
                let lo = xs.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                Ok(Body::Polygon(if hi > lo { vec![[lo, 0.0], [hi, 0.0]] } else { vec![[lo, 0.0]] }))
            }
            2 => {
                let h = convex_hull_2d(p.vertices())?;
                Ok(Body::Polygon(polygon::to_polygon(&h.polytope.rows())))
            }
            3 => {
                if affine_rank(p.vertices()) < 3 {
                    return Err(Error::Degenerate("3D body must be full-dimensional".into()));
                }
                let vertices = p.rows();
                let facets = facets_3d(&vertices, TOL_GEOM);
                Ok(Body::Polytope3d { vertices, facets })
            }
            n => Err(Error::Unsupported(format!("exact pieces in dimension {n}"))),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Body::Polygon(_) => 2,
            Body::Polytope3d { .. } => 3,
        }
    }

    pub fn vertices(&self) -> Vec<Vec<f64>> {
        match self {
            Body::Polygon(p) => polygon::to_rows(p),
            Body::Polytope3d { vertices, .. } => vertices.clone(),
        }
    }

    pub fn diameter(&self) -> f64 {
        diameter_f64(&self.vertices())
    }

    /// Vertex mean; inside the body.
    pub fn center(&self) -> Vec<f64> {
        let v = self.vertices();
        let mut c = vec![0.0; v[0].len()];
        for row in &v {
            for (a, b) in c.iter_mut().zip(row) {
                *a += b;
            }
        }
        c.iter().map(|a| a / v.len() as f64).collect()
    }

    /// Vertices of the body intersected with extra half-spaces.
    pub fn cell(&self, cuts: &[HalfSpace]) -> Vec<Vec<f64>> {
        match self {
            Body::Polygon(p) => {
                let mut q = p.clone();
                for h in cuts {
                    q = polygon::clip(&q, h);
                    if q.is_empty() {
                        break;
                    }
                }
                polygon::to_rows(&q)
            }
            Body::Polytope3d { facets, .. } => {
                let mut planes = facets.clone();
                planes.extend_from_slice(cuts);
                vertices_from_halfspaces_3d(&planes, TOL_GEOM)
            }
        }
    }
}

fn assemble(body: &Body, m: usize, cells: Vec<(usize, Vec<Vec<f64>>)>, pattern: String) -> PartitionResult {
    let mut pieces = vec![Piece::default(); m];
    for (k, c) in cells {
        if !c.is_empty() {
            pieces[k].cells.push(c);
        }
    }
    let verts = body.vertices();
    let assignment = verts
        .iter()
        .map(|v| {
            pieces
                .iter()
                .position(|p| p.cells.iter().flatten().any(|w| w.iter().zip(v).all(|(a, b)| (a - b).abs() <= 1e-9)))
                .unwrap_or(0)
        })
        .collect();
    let part_diameters: Vec<f64> = pieces.iter().map(Piece::diameter).collect();
    let d = body.diameter();
    let max = part_diameters.iter().copied().fold(0.0, f64::max);
    PartitionResult {
        m,
        d,
        theta: if d > 0.0 { max / d } else { 0.0 },
        assignment,
        part_diameters,
        pieces,
        pattern,
    }
}

fn ray_left(c: [f64; 2], a: f64) -> HalfSpace {
    // Points counterclockwise of the ray from c at angle a.
    let n = vec![a.sin(), -a.cos()];
    let off = n[0] * c[0] + n[1] * c[1];
    HalfSpace { normal: n, offset: off }
}

/// `m` angular sectors around `center` (the centroid when `None`).
///
/// Sector `k` runs counterclockwise from `angles[k]` to the next angle; the
/// last wraps around. Sectors wider than a half-turn are split in two convex
/// cells belonging to the same piece.
pub fn fan_partition_2d(p: &VPolytope, m: usize, angles: &[f64], center: Option<[f64; 2]>) -> Result<PartitionResult> {
    let body = Body::from_polytope(p)?;
    let Body::Polygon(poly) = &body else {
        return Err(Error::DimensionMismatch { expected: 2, found: p.dim() });
    };
    if angles.len() != m || m == 0 {
        return Err(Error::InvalidArgument(format!("need {m} cut angles, got {}", angles.len())));
    }
    if angles.windows(2).any(|w| w[1] <= w[0]) || angles[m - 1] - angles[0] >= 2.0 * PI {
        return Err(Error::InvalidArgument("cut angles must increase strictly within one turn".into()));
    }
    let c = center.unwrap_or_else(|| polygon::centroid(poly));
    let mut cells = Vec::new();
    for k in 0..m {
        let a0 = angles[k];
        let a1 = if k + 1 < m { angles[k + 1] } else { angles[0] + 2.0 * PI };
        let mut bounds = vec![(a0, a1)];
        if a1 - a0 > PI {
            let mid = 0.5 * (a0 + a1);
            bounds = vec![(a0, mid), (mid, a1)];
        }
        for (s, e) in bounds {
            let cuts = [ray_left(c, s), ray_left(c, e).flipped()];
            cells.push((k, body.cell(&cuts)));
        }
    }
    let desc = format!(
        "fan: center ({:.6}, {:.6}), cuts at [{}] deg",
        c[0],
        c[1],
        angles.iter().map(|a| format!("{:.4}", a.to_degrees())).collect::<Vec<_>>().join(", ")
    );
    Ok(assemble(&body, m, cells, desc))
}

/// Binary tree of cutting hyperplanes. Each leaf names the piece it belongs to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum CutTree {
    Leaf(usize),
    Split {
        /// `normal . x <= offset` goes to `below`.
        normal: Vec<f64>,
        offset: f64,
        below: Box<CutTree>,
        above: Box<CutTree>,
    },
}

impl CutTree {
    pub fn split(normal: Vec<f64>, offset: f64, below: CutTree, above: CutTree) -> CutTree {
        CutTree::Split {
            normal,
            offset,
            below: Box::new(below),
            above: Box::new(above),
        }
    }

    /// Cuts through `origin` along each axis in turn, labelling leaves `0..2^axes`.
    pub fn axis_bisections(origin: &[f64]) -> CutTree {
        fn build(origin: &[f64], axis: usize, label: usize) -> CutTree {
            if axis == origin.len() {
                return CutTree::Leaf(label);
            }
            let mut n = vec![0.0; origin.len()];
            n[axis] = 1.0;
            CutTree::split(n, origin[axis], build(origin, axis + 1, 2 * label), build(origin, axis + 1, 2 * label + 1))
        }
        build(origin, 0, 0)
    }

    pub fn pieces(&self) -> usize {
        match self {
            CutTree::Leaf(k) => k + 1,
            CutTree::Split { below, above, .. } => below.pieces().max(above.pieces()),
        }
    }

    fn leaves(&self, path: &mut Vec<HalfSpace>, out: &mut Vec<(usize, Vec<HalfSpace>)>) -> Result<()> {
        match self {
            CutTree::Leaf(k) => out.push((*k, path.clone())),
            CutTree::Split { normal, offset, below, above } => {
                let h = HalfSpace::new(normal.clone(), *offset).ok_or(Error::ZeroDirection)?;
                path.push(h.clone());
                below.leaves(path, out)?;
                path.pop();
                path.push(h.flipped());
                above.leaves(path, out)?;
                path.pop();
            }
        }
        Ok(())
    }
}

/// Pieces from the leaves of a cut tree. Exact pieces are built in 2D and 3D only.
pub fn cut_tree_partition(p: &VPolytope, tree: &CutTree) -> Result<PartitionResult> {
    if p.dim() > 3 {
        return Err(Error::Unsupported(format!(
            "exact cut-tree pieces in dimension {}; use a sampled upper bound instead",
            p.dim()
        )));
    }
    let body = Body::from_polytope(p)?;
    cut_tree_on(&body, tree)
}

pub(crate) fn cut_tree_on(body: &Body, tree: &CutTree) -> Result<PartitionResult> {
    let mut leaves = Vec::new();
    tree.leaves(&mut Vec::new(), &mut leaves)?;
    let cells = leaves.into_iter().map(|(k, cuts)| (k, body.cell(&cuts))).collect();
    Ok(assemble(
        body,
        tree.pieces(),
        cells,
        format!("cut tree: {}", serde_json::to_string(tree).unwrap_or_default()),
    ))
}

/// Power-diagram cells: cell `i` holds the points where
/// `|x - s_i|^2 - w_i` is smallest.
pub fn power_partition(p: &VPolytope, sites: &[Vec<f64>], weights: &[f64]) -> Result<PartitionResult> {
    let body = Body::from_polytope(p)?;
    power_on(&body, sites, weights)
}

pub(crate) fn power_on(body: &Body, sites: &[Vec<f64>], weights: &[f64]) -> Result<PartitionResult> {
    let dim = body.dim();
    if sites.is_empty() || sites.len() != weights.len() {
        return Err(Error::InvalidArgument("one weight per site required".into()));
    }
    if let Some(s) = sites.iter().find(|s| s.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, found: s.len() });
    }
    let sq = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>();
    let mut cells = Vec::with_capacity(sites.len());
    for i in 0..sites.len() {
        let mut cuts = Vec::new();
        for j in 0..sites.len() {
            if i == j {
                continue;
            }
            let n: Vec<f64> = sites[j].iter().zip(&sites[i]).map(|(a, b)| 2.0 * (a - b)).collect();
            let off = sq(&sites[j]) - sq(&sites[i]) - weights[j] + weights[i];
            // Coincident sites: the heavier one wins everything.
            match HalfSpace::new(n, off) {
                Some(h) => cuts.push(h),
                None if weights[i] < weights[j] || (weights[i] == weights[j] && j < i) => {
                    cuts.clear();
                    cuts.push(HalfSpace {
                        normal: vec![0.0; dim],
                        offset: -1.0,
                    });
                    break;
                }
                None => {}
            }
        }
        let degenerate = cuts.iter().any(|h| h.normal.iter().all(|&v| v == 0.0));
        cells.push((i, if degenerate { Vec::new() } else { body.cell(&cuts) }));
    }
    let desc = format!(
        "power diagram: sites {:?}, weights {:?}",
        sites
            .iter()
            .map(|s| s.iter().map(|v| (v * 1e6).round() / 1e6).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        weights.iter().map(|v| (v * 1e6).round() / 1e6).collect::<Vec<_>>()
    );
    Ok(assemble(body, sites.len(), cells, desc))
}

/// The pattern families known to the search.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Pattern {
    Fan { angles: Vec<f64>, center: Option<[f64; 2]> },
    CutTree(CutTree),
    Power { sites: Vec<Vec<f64>>, weights: Vec<f64> },
}

impl Pattern {
    pub fn apply(&self, p: &VPolytope) -> Result<PartitionResult> {
        match self {
            Pattern::Fan { angles, center } => fan_partition_2d(p, angles.len(), angles, *center),
            Pattern::CutTree(t) => cut_tree_partition(p, t),
            Pattern::Power { sites, weights } => power_partition(p, sites, weights),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> VPolytope {
        VPolytope::from_f64_rows(&[vec![-1.0, -1.0], vec![1.0, -1.0], vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap()
    }

    #[test]
    fn square_axis_fan() {
        let r = fan_partition_2d(&square(), 4, &[0.0, PI / 2.0, PI, 1.5 * PI], Some([0.0, 0.0])).unwrap();
        for d in &r.part_diameters {
            assert!((d - 2f64.sqrt()).abs() < 1e-12);
        }
        assert!((r.theta - 0.5).abs() < 1e-12);
        assert!(r.recheck_pieces(1e-12));
    }

    #[test]
    fn single_sector_is_whole_body() {
        let r = fan_partition_2d(&square(), 1, &[0.3], None).unwrap();
        assert!((r.theta - 1.0).abs() < 1e-12);
        let area: f64 = r.pieces[0].cells.iter().map(|c| polygon::area(&polygon::to_polygon(c))).sum();
        assert!((area - 4.0).abs() < 1e-12);
    }

    #[test]
    fn bad_angles_rejected() {
        assert!(fan_partition_2d(&square(), 2, &[1.0, 0.5], None).is_err());
        assert!(fan_partition_2d(&square(), 2, &[0.0, 7.0], None).is_err());
    }

    #[test]
    fn cube_octants() {
        let mut v = Vec::new();
        for x in [0.0, 2.0] {
            for y in [0.0, 2.0] {
                for z in [0.0, 2.0] {
                    v.push(vec![x, y, z]);
                }
            }
        }
        let cube = VPolytope::from_f64_rows(&v).unwrap();
        let r = cut_tree_partition(&cube, &CutTree::axis_bisections(&[1.0, 1.0, 1.0])).unwrap();
        assert_eq!(r.m, 8);
        for d in &r.part_diameters {
            assert!((d - 3f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn power_diagram_equal_weights_is_voronoi() {
        let sites = vec![vec![-0.5, 0.0], vec![0.5, 0.0]];
        let r = power_partition(&square(), &sites, &[0.0, 0.0]).unwrap();
        for d in &r.part_diameters {
            assert!((d - 5f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn segment_midpoint_cut() {
        let seg = VPolytope::from_f64_rows(&[vec![0.0], vec![1.0]]).unwrap();
        let t = CutTree::split(vec![1.0, 0.0], 0.5, CutTree::Leaf(0), CutTree::Leaf(1));
        let r = cut_tree_partition(&seg, &t).unwrap();
        assert!((r.theta - 0.5).abs() < 1e-12);
    }
}
