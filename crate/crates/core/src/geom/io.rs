//! Line-oriented point-set files.
//!
//! One point per line, whitespace-separated coordinates, each a decimal
//! literal or an exact rational `p/q`. Lines starting with `#` are comments.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::point::{Point, PointSet};
use crate::scalar::Scalar;

pub fn parse_point_set(text: &str, source: &str, exact_decimals: bool) -> Result<PointSet> {
    let mut points = Vec::new();
    let mut dim = None;
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse {
            file: source.to_string(),
            line: k + 1,
            msg,
        };
        let coords = line
            .split_whitespace()
            .map(|t| Scalar::parse(t, exact_decimals))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(err)?;
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(err(format!("expected {d} coordinates, found {}", coords.len())));
            }
            _ => {}
        }
        points.push(Point::new(coords));
    }
    if points.is_empty() {
        return Err(Error::Parse {
            file: source.to_string(),
            line: 0,
            msg: "no points".into(),
        });
    }
    PointSet::new(points)
}

pub fn read_point_set(path: &Path, exact_decimals: bool) -> Result<PointSet> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        file: path.display().to_string(),
        line: 0,
        msg: e.to_string(),
    })?;
    parse_point_set(&text, &path.display().to_string(), exact_decimals)
}

pub fn format_point_set(x: &PointSet, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        for l in h.lines() {
            out.push_str("# ");
            out.push_str(l);
            out.push('\n');
        }
    }
    for p in x.points() {
        let line: Vec<String> = p.coords.iter().map(Scalar::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_mixed() {
        let text = "# square\n0 0\n1 0\n\n1/2 0.75\n";
        let x = parse_point_set(text, "sq.txt", false).unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(x.get(2).coords[0], Scalar::ratio(1, 2));
        assert_eq!(x.get(2).coords[1], Scalar::Float(0.75));
        let x = parse_point_set(text, "sq.txt", true).unwrap();
        assert!(x.is_exact());
    }

    #[test]
    fn errors_name_file_and_line() {
        let e = parse_point_set("0 0\n1 x\n", "bad.txt", false).unwrap_err();
        assert_eq!(e.to_string(), "bad.txt:2: not a number: 'x'");
        let e = parse_point_set("0 0\n1 2 3\n", "bad.txt", false).unwrap_err();
        assert!(e.to_string().starts_with("bad.txt:2:"));
    }
}
