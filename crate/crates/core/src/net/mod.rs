//! Lattice nets of convex bodies and the verification pipeline.
//!
//! Bodies with `B ⊆ K ⊆ r_n B` are snapped to polytopes on `κ·ℤⁿ`; if every
//! lattice polytope in the thickened shell has a good partition, continuity
//! of `f_m` carries the bound back to every body.

pub mod enumerate;
pub mod lattice;
pub mod pipeline;
pub mod plan;
pub mod snap;
pub mod spec;

pub use enumerate::{count_2d, enumerate_2d, Enumeration, DEFAULT_GUARD_CAP};
pub use lattice::LatticePolytope;
pub use pipeline::{conclusion_arithmetic, run_config, run_pipeline, verify_polytopes, Conclusion, PipelineConfig, Status, VerificationReport};
pub use plan::{plan_report, PlanReport};
pub use snap::{snap, SnapResult};
pub use spec::{make_spec, NetSpec};
