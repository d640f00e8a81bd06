//! Generators, the drawing verifier, file formats, SVG output and
//! benchmarks.

pub mod bench;
pub mod format;
pub mod gen;
pub mod svg;
pub mod verify;

use thiserror::Error;

use crate::embed::EmbedError;
use crate::plane3tree::TreeError;

pub use bench::{bench, BenchReport, BenchSuite};
pub use format::{mapping_to_json, mapping_to_text, parse_mapping, Expected, InstanceFile};
pub use gen::{gen_plane3tree, gen_yes_instance, gen_yes_instance_with, GenOptions};
pub use svg::{export_svg, render_svg};
pub use verify::{verify, VerifierReport, VerifyMode, Violation};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("generator: {0}")]
    Generate(String),
    #[error("bad suite: {0}")]
    Suite(String),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
