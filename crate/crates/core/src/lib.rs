//! Symmetric designs with flag-transitive automorphism groups: constructions,
//! verification, permutation-group tests and arithmetic elimination.

pub mod acceptance;
pub mod algebra;
pub mod constructions;
pub mod design;
pub mod elimination;
pub mod oracle;
pub mod perm;
