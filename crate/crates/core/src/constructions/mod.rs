//! Projective spaces, difference-set developments and the named designs.

mod ambient;
mod catalog;
pub mod data;
mod difference;
mod projective;

pub use ambient::{AmbientGroup, AmbientKind, MAX_AMBIENT_ORDER};
pub use catalog::{
    catalog, fano_complement_design, InstanceCheck, NamedInstance, CATALOG_NAMES, IMPRIMITIVE_BASE_BLOCK,
    IMPRIMITIVE_BLOCK, PALEY_BASE_BLOCK, UNITARY_BASE_BLOCK,
};
pub use difference::{develop_difference_set, find_difference_set, DifferenceSetSpec, MAX_SEARCH_ORDER};
pub use projective::{projective_params, projective_space, ProjectiveSpace};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::design::DesignError;
use crate::perm::PermError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid ambient group: {0}")]
    InvalidAmbient(String),
    #[error("not a difference set: element {element} occurs {count} times as a difference, expected {expected}")]
    NotDifferenceSet {
        element: String,
        count: usize,
        expected: usize,
    },
    #[error("exhaustive search limited to groups of order <= 64, got {order}")]
    SearchTooLarge { order: usize },
    #[error("projective space needs n >= 3, got {n}")]
    DimensionTooSmall { n: usize },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("checksum mismatch for {file}: {detail}")]
    Checksum { file: String, detail: String },
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
