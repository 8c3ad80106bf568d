//! Geometric primitives: points, metrics, polytopes, projections, shells.

pub mod hausdorff;
pub mod hrep;
pub mod io;
pub mod lp;
pub mod metric;
pub mod point;
pub mod polygon;
pub mod polytope;
pub mod projection;
pub mod shell;

pub use hausdorff::{hausdorff, hausdorff_finite, point_to_polytope_distance};
pub use metric::{diameter, Diameter, Metric};
pub use point::{Point, PointSet};
pub use polytope::{convex_hull_2d, hull_vertex_filter, support_value, width, Hull2d, VPolytope};
pub use shell::{shell_check, ShellCheck, ShellSpec};
