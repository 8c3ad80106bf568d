//! Computational tools around Borsuk's partition problem.
//!
//! The crate covers diameters and partition functionals of finite sets and
//! polytopes, Hausdorff distances and lattice nets of convex bodies in the
//! shell `B ⊆ K ⊆ r_n B`, the set-family side (Larman's embedding and
//! Frankl–Wilson bounds), and classical constant-width constructions.
//!
//! Module map:
//!
//! - [`geom`]: points, metrics, polytopes, projection and Hausdorff distance, shells.
//! - [`graph`]: bitset graphs, exact coloring and clique search.
//! - [`partition`]: threshold graphs, `b(X)`, `f_m`, and geometric partition patterns.
//! - [`larman`]: uniform set families, the 0/1 embedding, `ℓ(𝒜, n, k)`, bounds.
//! - [`width`]: Reuleaux polygons, hexagon embedding, truncated octahedron, in/circumradii.
//! - [`net`]: lattice nets, snapping, enumeration, and the verification pipeline.
//! - [`cli`]: the `bsk` command-line front end.

// Dense matrix kernels index by row and column; `!(x > 0.0)` also rejects NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod geom;
pub mod graph;
pub mod larman;
pub mod net;
pub mod partition;
pub mod scalar;
pub mod width;

pub use error::{Error, Result};
pub use scalar::{Scalar, TOL_GEOM};
