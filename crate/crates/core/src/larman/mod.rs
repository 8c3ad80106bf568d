//! Uniform set families and Larman's reformulation of the partition problem.
//!
//! A family of `h`-subsets maps to 0/1 points whose squared distances are
//! `2(h - overlap)`. Splitting the points into parts of smaller diameter is
//! then splitting the family into subfamilies with larger overlaps.

pub mod bounds;
pub mod ell;
pub mod family;
pub mod fw;
pub mod generate;

pub use bounds::{bounds_table, kk_crossover, BoundsRecord, Crossover};
pub use ell::{ell, verify_larman_borsuk_equivalence, Ell, Equivalence, OverlapGraph};
pub use family::{embed, overlap, parse_family, SetFamily};
pub use fw::{fw_lemma2_check, fw_lemma3_search, Lemma2Report, Lemma3Report};
pub use generate::{generate_admissible_families, GenMode};
