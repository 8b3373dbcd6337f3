//! Classical group orders, the arithmetic constraints on flag-transitive
//! symmetric designs, the inequality lemmas and the divisor-scan catalog.

mod admissible;
mod bounds;
mod catalog;
mod corollary;
mod division;
mod families;

pub use admissible::{admissible, admissible_k, basic_constraints, subdegree_condition, AdmissiblePair};
pub use bounds::{check_bounds, order_bound_cases, Bound, BOUND_FIELD_ORDERS};
pub use catalog::{
    evaluate_row, load_catalog, parse_catalog, run_catalog, select_rows, CatalogGroup, CatalogRow, Expectation,
    RowReport, RowStatus,
};
pub use corollary::{corollary_families, FamilyCase, FamilyTuple, MAX_FAMILY_LAMBDA};
pub use division::{check_division_identity, division_residual, g_poly, table2_row, IntPoly};
pub use families::{sl_order, so_even_order, so_odd_order, sp_order, su_order, Family, GroupFamilySpec};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EliminationError {
    #[error("invalid group family: {0}")]
    InvalidFamily(String),
    #[error("{bound}: {detail}")]
    OutOfRange { bound: String, detail: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("catalog line {line}: {detail}")]
    Malformed { line: usize, detail: String },
    #[error("no catalog rows match `{0}`")]
    UnknownTable(String),
    #[error("catalog checksum: {0}")]
    Checksum(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
