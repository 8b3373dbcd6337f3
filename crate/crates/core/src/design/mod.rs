//! Incidence structures, symmetric-design verification and automorphisms.
//!
//! Point labels are 0-based in memory; the text format and every error
//! message use 1-based labels.

mod automorphism;
mod incidence;
mod verify;

pub use automorphism::{block_action, is_automorphism, is_flag_transitive, orbit_design, Flag};
pub use incidence::IncidenceStructure;
pub use verify::{complement, verify_symmetric, DesignParams};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error("block count mismatch: v = {v} but there are {blocks} blocks")]
    BlockCount { v: usize, blocks: usize },
    #[error("non-uniform block size: block {block:?} has {size} points, expected {expected}")]
    NonUniform {
        block: Vec<usize>,
        size: usize,
        expected: usize,
    },
    #[error("pair-count violation: points {{{},{}}} lie on {count} blocks, expected {expected}", points.0, points.1)]
    PairCount {
        points: (usize, usize),
        count: usize,
        expected: usize,
    },
    #[error("dual violation: blocks {:?} and {:?} meet in {count} points, expected {expected}", blocks.0, blocks.1)]
    Dual {
        blocks: (Vec<usize>, Vec<usize>),
        count: usize,
        expected: usize,
    },
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
    #[error("too few points for a design: v = {v}")]
    TooSmall { v: usize },
    #[error("empty block")]
    EmptyBlock,
    #[error("point {point} out of range 1..={v}")]
    PointOutOfRange { point: usize, v: usize },
    #[error("point {point} repeated within a block")]
    RepeatedPoint { point: usize },
    #[error("repeated block {block:?}")]
    RepeatedBlock { block: Vec<usize> },
    #[error("degree mismatch: design has {expected} points, permutation has degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("generator {index} is not an automorphism: {generator}")]
    NotAutomorphism { index: usize, generator: String },
    #[error("malformed design file: {0}")]
    Malformed(String),
}
