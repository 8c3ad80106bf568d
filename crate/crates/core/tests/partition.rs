use borsuk::geom::{Metric, PointSet, VPolytope};
use borsuk::graph::{chromatic_number, color_with, ColorOutcome, Graph};
use borsuk::partition::witness::{from_json, to_json};
use borsuk::partition::{
    b_finite, check_continuity, cut_tree_partition, f_m_finite, fan_partition_2d, threshold_graph, verify_f_bound, CutTree, FiniteOptions, SearchParams,
};
use borsuk::{Scalar, TOL_GEOM};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn triangle() -> PointSet {
    PointSet::from_f64_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, 3f64.sqrt() / 2.0]]).unwrap()
}

fn rows_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

#[test]
fn threshold_edges_are_strict() {
    let x = triangle();
    let g = threshold_graph(&x, Metric::Euclidean, &Scalar::float(0.5), TOL_GEOM);
    assert_eq!(g.edges.len(), 3);
    let g = threshold_graph(&x, Metric::Euclidean, &Scalar::float(1.0), TOL_GEOM);
    assert!(g.edges.is_empty());
}

#[test]
fn threshold_graph_matches_pairwise_recheck() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let rows: Vec<Vec<f64>> = (0..15).map(|_| vec![rng.random_range(0.0..1.0), rng.random_range(0.0..1.0)]).collect();
        let x = PointSet::from_f64_rows(&rows).unwrap();
        let t = rng.random_range(0.2..0.9);
        let g = threshold_graph(&x, Metric::Euclidean, &Scalar::float(t), 0.0);
        let mut want = Vec::new();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if rows_dist(&rows[i], &rows[j]) > t {
                    want.push((i, j));
                }
            }
        }
        let mut got = g.edges.clone();
        got.sort();
        assert_eq!(got, want);
    }
}

#[test]
fn complete_graph_colorings() {
    let k5 = Graph::complete(5);
    assert_eq!(color_with(&k5, 4, 1_000_000), ColorOutcome::NotColorable);
    match color_with(&k5, 5, 1_000_000) {
        ColorOutcome::Colorable(c) => assert!(k5.is_proper_coloring(&c)),
        other => panic!("{other:?}"),
    }
}

fn exhaustive_colorable(g: &Graph, m: usize) -> bool {
    fn go(g: &Graph, m: usize, v: usize, c: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        // Symmetry break: vertex v uses at most one new color.
        let used = c.iter().copied().max().map_or(0, |x| x + 1);
        for col in 0..m.min(used + 1) {
            if (0..v).all(|u| !(g.has_edge(u, v) && c[u] == col)) {
                c.push(col);
                if go(g, m, v + 1, c) {
                    return true;
                }
                c.pop();
            }
        }
        false
    }
    go(g, m, 0, &mut Vec::new())
}

#[test]
fn coloring_matches_exhaustive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for trial in 0..30 {
        let n = 30;
        let p = [0.08, 0.12, 0.18][trial % 3];
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(a, b);
                }
            }
        }
        for m in 1..=3 {
            let got = color_with(&g, m, 50_000_000);
            let want = exhaustive_colorable(&g, m);
            match got {
                ColorOutcome::Colorable(c) => {
                    assert!(want && g.is_proper_coloring(&c) && c.iter().all(|&x| x < m));
                }
                ColorOutcome::NotColorable => assert!(!want, "trial {trial} m {m}"),
                ColorOutcome::Unknown => panic!("budget"),
            }
        }
        let chi = chromatic_number(&g, 50_000_000);
        assert!(chi.lower == chi.upper && g.is_proper_coloring(&chi.coloring));
    }
}

#[test]
fn simplex_vertices_need_n_plus_one_parts() {
    for n in 1..=8 {
        let rows: Vec<Vec<i64>> = (0..=n).map(|i| (0..=n).map(|j| i64::from(i == j)).collect()).collect();
        let x = PointSet::from_i64_rows(&rows).unwrap();
        assert_eq!(b_finite(&x, &FiniteOptions::default()).unwrap().value(), Some(n + 1));
    }
}

#[test]
fn square_and_collinear_b() {
    let sq = PointSet::from_i64_rows(&[vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(b_finite(&sq, &FiniteOptions::default()).unwrap().value(), Some(2));
    let line = PointSet::from_i64_rows(&[vec![0], vec![1], vec![2]]).unwrap();
    assert_eq!(b_finite(&line, &FiniteOptions::default()).unwrap().value(), Some(2));
    assert!(b_finite(&PointSet::from_i64_rows(&[vec![0]]).unwrap(), &FiniteOptions::default()).is_err());
}

#[test]
fn equilateral_f_values() {
    let x = triangle();
    assert_eq!(f_m_finite(&x, 3, &FiniteOptions::default()).unwrap().theta(), Some(0.0));
    let t = f_m_finite(&x, 2, &FiniteOptions::default()).unwrap().theta().unwrap();
    assert!((t - 1.0).abs() < 1e-12);
}

/// Best `θ` over all assignments of at most 12 points to `m` labels.
fn exhaustive_f(rows: &[Vec<f64>], m: usize) -> f64 {
    let n = rows.len();
    let d = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| rows_dist(&rows[i], &rows[j]))
        .fold(0.0, f64::max);
    let mut best = f64::INFINITY;
    let mut lab = vec![0usize; n];
    fn rec(k: usize, used: usize, m: usize, rows: &[Vec<f64>], lab: &mut Vec<usize>, cur: f64, best: &mut f64) {
        if cur >= *best {
            return;
        }
        if k == rows.len() {
            *best = cur;
            return;
        }
        for c in 0..m.min(used + 1) {
            let w = (0..k).filter(|&j| lab[j] == c).map(|j| rows_dist(&rows[j], &rows[k])).fold(cur, f64::max);
            lab[k] = c;
            rec(k + 1, used.max(c + 1), m, rows, lab, w, best);
        }
    }
    rec(0, 0, m, rows, &mut lab, 0.0, &mut best);
    best / d
}

#[test]
fn f3_matches_exhaustive_partitions_on_disk_subsamples() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let disk: Vec<Vec<f64>> = (0..50)
        .map(|_| loop {
            let (x, y): (f64, f64) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            if x * x + y * y <= 1.0 {
                break vec![x, y];
            }
        })
        .collect();
    let full = f_m_finite(&PointSet::from_f64_rows(&disk).unwrap(), 3, &FiniteOptions::default()).unwrap();
    assert!(full.best().recheck_finite(&PointSet::from_f64_rows(&disk).unwrap(), Metric::Euclidean, 1e-9));
    for s in 0..4 {
        let sub: Vec<Vec<f64>> = disk[s * 12..s * 12 + 12].to_vec();
        let got = f_m_finite(&PointSet::from_f64_rows(&sub).unwrap(), 3, &FiniteOptions::default())
            .unwrap()
            .theta()
            .unwrap();
        assert!((got - exhaustive_f(&sub, 3)).abs() < 1e-12, "subsample {s}");
    }
}

#[test]
fn continuity_examples() {
    let base: Vec<Vec<f64>> = vec![vec![0.0, 0.0], vec![2.5, 0.0], vec![1.0, 2.0], vec![2.0, 1.5], vec![0.3, 1.1]];
    let x = PointSet::from_f64_rows(&base).unwrap();
    let same = check_continuity(&x, &x, 3).unwrap();
    assert!(same.epsilon < 1e-12 && (same.f1 - same.f2).abs() < 1e-12);
    let moved: Vec<Vec<f64>> = base.iter().map(|r| vec![r[0] + 0.3, r[1] - 0.4]).collect();
    let t = check_continuity(&x, &PointSet::from_f64_rows(&moved).unwrap(), 3).unwrap();
    assert!((t.epsilon - 0.5).abs() < 1e-9 && (t.f1 - t.f2).abs() < 1e-9 && t.bound_ok);
    let small = PointSet::from_f64_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
    assert!(check_continuity(&small, &small, 2).is_err());
}

fn hexagon(width: f64, phase: f64) -> VPolytope {
    let r = width / 3f64.sqrt();
    VPolytope::from_f64_rows(
        &(0..6)
            .map(|k| {
                let t = phase + k as f64 * std::f64::consts::PI / 3.0;
                vec![r * t.cos(), r * t.sin()]
            })
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

#[test]
fn hexagon_fan_toward_alternate_midpoints() {
    // Vertices at 0°, 60°, ...; edge midpoints at 30°, 150°, 270°.
    let p = hexagon(1.0, 0.0);
    let a = std::f64::consts::PI / 6.0;
    let r = fan_partition_2d(
        &p,
        3,
        &[a, a + 2.0 * std::f64::consts::PI / 3.0, a + 4.0 * std::f64::consts::PI / 3.0],
        Some([0.0, 0.0]),
    )
    .unwrap();
    assert_eq!(r.pieces.len(), 3);
    assert!(r.part_diameters.iter().all(|&d| d <= 3f64.sqrt() / 2.0 + 1e-12), "{:?}", r.part_diameters);
}

#[test]
fn square_axis_fan() {
    let p = VPolytope::from_f64_rows(&[vec![-1.0, -1.0], vec![1.0, -1.0], vec![1.0, 1.0], vec![-1.0, 1.0]]).unwrap();
    let h = std::f64::consts::FRAC_PI_2;
    let r = fan_partition_2d(&p, 4, &[0.0, h, 2.0 * h, 3.0 * h], Some([0.0, 0.0])).unwrap();
    for d in r.part_diameters {
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
    }
}

fn shoelace(poly: &[Vec<f64>]) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    // Cells may be unordered; sort by angle around their mean first.
    let c = [
        poly.iter().map(|v| v[0]).sum::<f64>() / n as f64,
        poly.iter().map(|v| v[1]).sum::<f64>() / n as f64,
    ];
    let mut p = poly.to_vec();
    p.sort_by(|a, b| f64::atan2(a[1] - c[1], a[0] - c[0]).total_cmp(&f64::atan2(b[1] - c[1], b[0] - c[0])));
    (0..n).map(|i| p[i][0] * p[(i + 1) % n][1] - p[(i + 1) % n][0] * p[i][1]).sum::<f64>().abs() / 2.0
}

#[test]
fn fan_pieces_tile_random_polygons() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let rows: Vec<Vec<f64>> = (0..10).map(|_| vec![rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)]).collect();
        let p = VPolytope::from_f64_rows(&rows).unwrap();
        let hull = borsuk::geom::convex_hull_2d(p.vertices()).unwrap().polytope.rows();
        let m = rng.random_range(2..6);
        let mut angles: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let r = fan_partition_2d(&p, m, &angles, None).unwrap();
        let total: f64 = r.pieces.iter().flat_map(|pc| pc.cells.iter()).map(|c| shoelace(c)).sum();
        assert!((total - shoelace(&hull)).abs() < 1e-9, "{total} vs {}", shoelace(&hull));
    }
}

#[test]
fn cube_axis_bisections() {
    let rows: Vec<Vec<f64>> = (0..8).map(|k| (0..3).map(|i| ((k >> i) & 1) as f64 * 2.0).collect()).collect();
    let p = VPolytope::from_f64_rows(&rows).unwrap();
    let r = cut_tree_partition(&p, &CutTree::axis_bisections(&[1.0, 1.0, 1.0])).unwrap();
    assert_eq!(r.pieces.len(), 8);
    for d in &r.part_diameters {
        assert!((d - 3f64.sqrt()).abs() < 1e-9);
    }
    assert!(r.recheck_pieces(1e-9));
}

#[test]
fn planar_cut_tree_agrees_with_fan() {
    // Two perpendicular cuts through the center are the 4-sector fan at 0, 90, 180, 270 degrees.
    let p = hexagon(1.0, 0.2);
    let tree = CutTree::axis_bisections(&[0.0, 0.0]);
    let a = cut_tree_partition(&p, &tree).unwrap();
    let h = std::f64::consts::FRAC_PI_2;
    let b = fan_partition_2d(&p, 4, &[0.0, h, 2.0 * h, 3.0 * h], Some([0.0, 0.0])).unwrap();
    let mut da = a.part_diameters.clone();
    let mut db = b.part_diameters.clone();
    da.sort_by(f64::total_cmp);
    db.sort_by(f64::total_cmp);
    for (x, y) in da.iter().zip(&db) {
        assert!((x - y).abs() < 1e-9);
    }
}

#[test]
fn verify_examples() {
    let params = SearchParams::default();
    let h = verify_f_bound(&hexagon(1.0, 0.0), 3, 0.87, &params).unwrap();
    assert!(h.is_verified() && h.best_theta().unwrap() <= 0.87);
    let seg = VPolytope::from_f64_rows(&[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
    let s = verify_f_bound(&seg, 2, 0.51, &params).unwrap();
    assert!(s.is_verified());
    assert!(verify_f_bound(&seg, 2, 1.0, &params).is_err());
}

#[test]
fn witness_round_trip() {
    let r = f_m_finite(&triangle(), 2, &FiniteOptions::default()).unwrap();
    assert_eq!(&from_json(&to_json(r.best())).unwrap(), r.best());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_m_parts_cover_and_respect_theta(
        c in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 2..12),
        m in 1usize..5,
    ) {
        let rows: Vec<Vec<f64>> = c.iter().map(|&(x, y)| vec![x, y]).collect();
        let x = PointSet::from_f64_rows(&rows).unwrap();
        let d = borsuk::geom::diameter(&x, Metric::Euclidean).value;
        prop_assume!(d > 1e-6);
        let r = f_m_finite(&x, m, &FiniteOptions::default()).unwrap();
        let best = r.best();
        prop_assert!(best.theta <= 1.0 + 1e-12);
        prop_assert_eq!(best.assignment.len(), rows.len());
        prop_assert!(best.assignment.iter().all(|&a| a < m));
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if best.assignment[i] == best.assignment[j] {
                    prop_assert!(rows_dist(&rows[i], &rows[j]) <= best.theta * d + 1e-9);
                }
            }
        }
    }

    #[test]
    fn continuity_bound_under_jitter(
        c in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), 4..9),
        j in proptest::collection::vec((-0.01f64..0.01, -0.01f64..0.01), 9),
        m in 2usize..5,
    ) {
        let a: Vec<Vec<f64>> = c.iter().map(|&(x, y)| vec![x, y]).collect();
        let b: Vec<Vec<f64>> = a.iter().zip(&j).map(|(r, d)| vec![r[0] + d.0, r[1] + d.1]).collect();
        let (x1, x2) = (PointSet::from_f64_rows(&a).unwrap(), PointSet::from_f64_rows(&b).unwrap());
        prop_assume!(borsuk::geom::diameter(&x1, Metric::Euclidean).value >= 2.0);
        prop_assume!(borsuk::geom::diameter(&x2, Metric::Euclidean).value >= 2.0);
        let r = check_continuity(&x1, &x2, m).unwrap();
        prop_assert_eq!(r.bound_ok, (r.f1 - r.f2).abs() <= 2.0 * r.epsilon + TOL_GEOM);
        prop_assert!(r.bound_ok);
    }
}
