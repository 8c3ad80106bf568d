use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partition::PartitionResult;

const COLORS: [&str; 8] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2", "#edc948", "#9c755f"];

pub fn to_json(r: &PartitionResult) -> String {
    serde_json::to_string_pretty(r).expect("partition results serialize")
}

pub fn from_json(text: &str) -> Result<PartitionResult> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        file: "<json>".into(),
        line: e.line(),
        msg: e.to_string(),
    })
}

/// SVG drawing of a planar partition: one color per piece, diameters in the legend.
pub fn render_svg(r: &PartitionResult, outline: Option<&[Vec<f64>]>) -> Result<String> {
    let cells: Vec<&Vec<Vec<f64>>> = r.pieces.iter().flat_map(|p| p.cells.iter()).collect();
    if cells.iter().flat_map(|c| c.iter()).any(|v| v.len() != 2) {
        return Err(Error::Unsupported("SVG output is for planar partitions".into()));
    }
    let all: Vec<&Vec<f64>> = cells.iter().flat_map(|c| c.iter()).chain(outline.into_iter().flatten()).collect();
    if all.is_empty() {
        return Err(Error::Empty);
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in &all {
        x0 = x0.min(v[0]);
        x1 = x1.max(v[0]);
        y0 = y0.min(v[1]);
        y1 = y1.max(v[1]);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let size = 480.0;
    let pad = 20.0;
    let sx = |x: f64| pad + (x - x0) / span * size;
    let sy = |y: f64| pad + (y1 - y) / span * size;
    let legend = 18.0 * r.m as f64 + 10.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = size + 2.0 * pad,
        h = size + 2.0 * pad + legend
    );
    for (k, piece) in r.pieces.iter().enumerate() {
        for c in &piece.cells {
            let pts: Vec<String> = c.iter().map(|v| format!("{:.3},{:.3}", sx(v[0]), sy(v[1]))).collect();
            let _ = writeln!(
                s,
                r#"  <polygon points="{}" fill="{}" fill-opacity="0.6" stroke="black" stroke-width="1"/>"#,
                pts.join(" "),
                COLORS[k % COLORS.len()]
            );
        }
    }
    if let Some(o) = outline {
        let pts: Vec<String> = o.iter().map(|v| format!("{:.3},{:.3}", sx(v[0]), sy(v[1]))).collect();
        let _ = writeln!(s, r#"  <polygon points="{}" fill="none" stroke="black" stroke-width="2"/>"#, pts.join(" "));
    }
    for (k, d) in r.part_diameters.iter().enumerate() {
        let y = size + 2.0 * pad + 14.0 + 18.0 * k as f64;
        let _ = writeln!(
            s,
            r#"  <text x="{pad}" y="{y}" font-family="monospace" font-size="13" fill="{}">piece {k}: diameter {d:.6} (ratio {:.6})</text>"#,
            COLORS[k % COLORS.len()],
            if r.d > 0.0 { d / r.d } else { 0.0 }
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
