//! Permutations and permutation groups: orbits, Schreier–Sims, stabilizers,
//! subdegrees and block systems.
//!
//! Points are 0-based in memory and 1-based in text formats and error messages.

mod blocks;
mod chain;
mod group;
mod permutation;

pub use blocks::BlockSystem;
pub use chain::StabilizerChain;
pub use group::PermutationGroup;
pub use permutation::Permutation;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} repeated in cycle notation")]
    RepeatedPoint { point: usize },
    #[error("image array is not a bijection")]
    NotBijective,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("the two points must be distinct")]
    EqualPoints,
}
