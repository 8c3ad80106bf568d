use std::f64::consts::PI;

use borsuk::geom::{diameter, width, Metric, VPolytope};
use borsuk::partition::{cut_tree_partition, CutTree};
use borsuk::width::hexagon::{concurrency_defect, embed_in_hexagon, hexagon_three_partition, HexagonPose};
use borsuk::width::{
    eggleston_bound, eggleston_check, hexagon_max_sq_diameter_exact, insphere_circumsphere_2d, regular_polygon, reuleaux_polygon, truncated_octahedron,
    width_constancy, QSqrt3,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

#[test]
fn reuleaux_triangle_basics() {
    let b = reuleaux_polygon(3, 1.0, 64).unwrap();
    for i in 0..3 {
        assert!((dist(&b.arc_centers[i], &b.arc_centers[(i + 1) % 3]) - 1.0).abs() < 1e-12);
    }
    assert!((diameter(b.polygon.vertices(), Metric::Euclidean).value - 1.0).abs() < 1e-12);
    for k in 0..64 {
        let t = k as f64 * PI / 64.0;
        let w = width(&b.polygon, &[t.cos(), t.sin()]).unwrap();
        assert!((1.0 - 5e-3..=1.0 + 1e-12).contains(&w), "{w}");
    }
    assert!(reuleaux_polygon(4, 1.0, 16).is_err());
}

#[test]
fn pentagon_widths_within_sagitta() {
    let b = reuleaux_polygon(5, 1.0, 40).unwrap();
    let (lo, hi) = width_constancy(&b.polygon, 1000).unwrap();
    assert!(hi <= 1.0 + 1e-12 && lo >= 1.0 - b.sagitta - 1e-12, "{lo} {hi} {}", b.sagitta);
}

#[test]
fn width_spread_examples() {
    let disk = regular_polygon(256, 0.5, 0.0).unwrap();
    let (lo, hi) = width_constancy(&disk, 512).unwrap();
    assert!(hi - lo <= 4e-4);
    let sq = VPolytope::from_f64_rows(&[vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    let (lo, hi) = width_constancy(&sq, 720).unwrap();
    assert!((lo - 1.0).abs() < 1e-12 && (hi - 2f64.sqrt()).abs() < 1e-4);
    let r = reuleaux_polygon(3, 1.0, 128).unwrap();
    let (lo, hi) = width_constancy(&r.polygon, 720).unwrap();
    assert!(hi - lo <= 1e-3);
}

#[test]
fn hexagon_pose_geometry() {
    let h = HexagonPose::new(0.3, [1.0, -2.0], 2.0);
    let v = h.hexagon.rows();
    assert!((dist(&v[0], &v[3]) - 4.0).abs() < 1e-12);
    let n = [0.3f64.cos(), 0.3f64.sin()];
    assert!((width(&h.hexagon, &n).unwrap() - 2.0 * 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn reuleaux_triangle_fits_the_hexagon() {
    let b = reuleaux_polygon(3, 1.0, 256).unwrap();
    let pose = embed_in_hexagon(&b.polygon, 1e-10).unwrap();
    assert!(pose.contains(&b.polygon, 1e-9));
    assert!((pose.width() - 1.0).abs() < 1e-12);
}

#[test]
fn disk_defect_vanishes_everywhere() {
    let d = regular_polygon(720, 0.5, 0.0).unwrap();
    for k in 0..12 {
        assert!(concurrency_defect(&d, k as f64 * PI / 36.0).abs() < 1e-4);
    }
}

#[test]
fn unit_segment_embeds() {
    let s = VPolytope::from_f64_rows(&[vec![0.2, 0.1], vec![1.2, 0.1]]).unwrap();
    let pose = embed_in_hexagon(&s, 1e-10).unwrap();
    assert!(pose.contains(&s, 1e-9));
}

#[test]
fn hexagon_partition_constants() {
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    assert_eq!(hexagon_max_sq_diameter_exact(&one), QSqrt3::from_ratios(3, 4, 0, 1));
    assert_eq!(hexagon_max_sq_diameter_exact(&two), QSqrt3::from_ratios(3, 1, 0, 1));
    let r = hexagon_three_partition(&HexagonPose::new(0.0, [0.0, 0.0], 1.0 / 3f64.sqrt()));
    assert_eq!(r.pieces.len(), 3);
    assert!((r.max_part_diameter() - 3f64.sqrt() / 2.0).abs() < 1e-12);
}

#[test]
fn octahedron_constructions() {
    let o = truncated_octahedron([0.0; 3]).unwrap();
    assert_eq!(o.len(), 6);
    for s in [[1.0, 1.0, 1.0], [1.0, -1.0, 1.0], [-1.0, -1.0, 1.0], [1.0, 1.0, -1.0]] {
        assert!((width(&o, &s).unwrap() - 1.0).abs() < 1e-12);
    }
    // Small equal cuts: each cut corner becomes a square, three untouched corners remain.
    let a = 3f64.sqrt() / 2.0;
    let t = 0.1;
    let p = truncated_octahedron([t; 3]).unwrap();
    let mut hand: Vec<Vec<f64>> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                for s in [t, -t] {
                    let mut v = vec![0.0; 3];
                    v[i] = a - t;
                    v[j] = s;
                    hand.push(v);
                }
            }
        }
        let mut v = vec![0.0; 3];
        v[i] = -a;
        hand.push(v);
    }
    assert_eq!(p.len(), 15);
    for v in p.rows() {
        assert!(hand.iter().any(|h| dist(h, &v) < 1e-12), "{v:?}");
    }
    assert!(truncated_octahedron([0.5, 0.5, 0.0]).is_err());
}

#[test]
fn octahedron_bisections_are_rechecked() {
    let p = truncated_octahedron(borsuk::width::octahedron::default_cut_depths()).unwrap();
    let r = cut_tree_partition(&p, &CutTree::axis_bisections(&[0.0, 0.0, 0.0])).unwrap();
    for piece in &r.pieces {
        let v = piece.vertices();
        let brute = v.iter().flat_map(|a| v.iter().map(move |b| dist(a, b))).fold(0.0, f64::max);
        assert!(piece.diameter() <= brute + 1e-12 && brute <= piece.diameter() + 1e-12);
    }
}

#[test]
fn reuleaux_radii() {
    let b = reuleaux_polygon(3, 1.0, 4096).unwrap();
    let ic = insphere_circumsphere_2d(&b.polygon).unwrap();
    // Circumcenter of the three arc centers, computed independently.
    let c = b.arc_centers.iter().fold([0.0, 0.0], |s, v| [s[0] + v[0] / 3.0, s[1] + v[1] / 3.0]);
    let big_r = dist(&c, &b.arc_centers[0]);
    assert!((big_r - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    assert!((ic.big_r - big_r).abs() < 1e-6);
    assert!((ic.r - (1.0 - big_r)).abs() < 1e-6);
    assert!(dist(&ic.center_in, &c) < 1e-6 && dist(&ic.center_out, &c) < 1e-6);
}

#[test]
fn eggleston_examples() {
    assert!((eggleston_bound(2) - (2.0f64 / 6.0).sqrt()).abs() < 1e-15);
    let b4 = eggleston_bound(4);
    assert!((b4 - 0.4f64.sqrt()).abs() < 1e-15);
    assert!((b4 / (1.0 - b4) - (10f64.sqrt() + 2.0) / 3.0).abs() < 1e-12);
    assert!(eggleston_check(2, 0.423, 0.577, None, 1e-3).ok);
    assert!(!eggleston_check(2, 0.6, 0.5, None, 1e-3).ok);
    let disk = regular_polygon(1024, 1.0, 0.0).unwrap();
    let ic = insphere_circumsphere_2d(&disk).unwrap();
    assert!((ic.r - 1.0).abs() < 1e-4 && (ic.big_r - 1.0).abs() < 1e-9);
}

proptest! {
    #[test]
    fn qsqrt3_order_matches_floats(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
        let x = QSqrt3::from_ratios(a, 7, b, 5);
        let y = QSqrt3::from_ratios(c, 7, d, 5);
        let (fx, fy) = (x.to_f64(), y.to_f64());
        if (fx - fy).abs() > 1e-9 {
            prop_assert_eq!(x < y, fx < fy);
        }
        prop_assert!(((x.clone() * y.clone()).to_f64() - fx * fy).abs() < 1e-9);
        prop_assert!(((x + y).to_f64() - (fx + fy)).abs() < 1e-12);
    }

    #[test]
    fn reuleaux_widths_stay_in_the_sagitta_band(k in prop_oneof![Just(3usize), Just(5), Just(7), Just(9)], n in 8usize..80, w in 0.5f64..3.0) {
        let b = reuleaux_polygon(k, w, n).unwrap();
        let (lo, hi) = width_constancy(&b.polygon, 360).unwrap();
        prop_assert!(hi <= w * (1.0 + 1e-12) && lo >= w - b.sagitta - 1e-12);
    }
}
