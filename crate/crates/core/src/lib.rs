//! Exact enumeration, counting and analysis of Jordan structures.
//!
//! A Segre characteristic records the Jordan block sizes of a square matrix
//! grouped by eigenvalue. This crate
//!
//! * enumerates integer partitions and Segre characteristics of a given size,
//! * counts them (`P(n)`, the partitions-of-partitions numbers) two ways,
//! * turns a rank pattern `rank((A - λI)^k)` into Jordan block sizes,
//! * analyzes concrete rational matrices with exact arithmetic, and
//! * renders Jordan structures as ASCII or SVG.

pub mod error;
pub mod jordan;
pub mod linalg;
pub mod partitions;
pub mod rank;
pub mod render;
pub mod segre;

mod factor;
mod text;

pub use error::{Error, Result};
pub use jordan::{
    analyze, build_jordan, rank_pattern_of, AnalysisReport, EigenvalueReport, JordanSpec,
};
pub use linalg::{rational_roots, ExactMatrix, PolynomialZ, Rational, RootFactorization};
pub use partitions::{conjugate, enumerate_partitions, partition_count, Partition, Partitions};
pub use rank::{
    blocks_from_rank_pattern, nullity_growth, rank_pattern_from_blocks, NullityGrowth, RankPattern,
};
pub use render::{
    grid_of, render_ascii, render_ferrers, render_ferrers_conjugate_pair, render_svg, CellKind,
    StructureGrid,
};
pub use segre::{
    count_segre_gf, count_segre_sum, enumerate_segre, format_segre, multipartitions, parse_segre,
    SegreCharacteristic,
};
