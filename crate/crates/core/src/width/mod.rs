//! Constant-width bodies and the classical small-dimension partitions.

pub mod hexagon;
pub mod insphere;
pub mod octahedron;
pub mod qsqrt3;
pub mod reuleaux;

pub use hexagon::{embed_in_hexagon, hexagon_max_sq_diameter_exact, hexagon_three_partition, three_partition_unit_diameter, HexagonPose};
pub use insphere::{eggleston_bound, eggleston_check, insphere_circumsphere_2d, EgglestonCheck, InCircum};
pub use octahedron::{octahedron_four_partition, truncated_octahedron, OctaReport};
pub use qsqrt3::QSqrt3;
pub use reuleaux::{regular_polygon, reuleaux_polygon, width_constancy, ReuleauxBody};
