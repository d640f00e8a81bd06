//! Point-set embedding of plane 3-trees.
//!
//! * [`geometry`]: exact integer and rational predicates.
//! * [`plane3tree`]: recognition and the representative tree.
//! * [`range_oracle`]: triangular range counting and reporting.
//! * [`embed`]: the exact problem (`k = n` points), two search modes.
//! * [`general`]: the dynamic program for `k >= n` points.
//! * [`harness`]: generators, verifier, formats, SVG, benchmarks.

pub mod embed;
pub mod general;
pub mod geometry;
pub mod harness;
pub mod plane3tree;
pub mod range_oracle;

pub use embed::{embed, embed_with, AlgoStats, EmbedError, EmbedOptions, EmbedResult, Mapping, Mode, Outcome};
pub use general::{embed_general, embed_general_with_table};
pub use geometry::Point;
pub use plane3tree::{validate_and_build, PlaneGraphInput, RepTree};
pub use range_oracle::{Backend, RangeOracle};
