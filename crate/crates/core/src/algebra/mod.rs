//! Exact arithmetic: primality, factorization, divisors and finite fields.

mod factor;
mod field;
mod primes;

pub use factor::{divisors, factorize, Factorization};
pub use field::{FieldTable, PrimePower, MAX_TABLE_ORDER};
pub use primes::{is_prime, is_prime_u64, primality, sieve, Primality};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot factorize zero")]
    ZeroFactorization,
    #[error("factorization of {0} timed out")]
    FactorTimeout(BigUint),
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("{0} is not a prime power")]
    NotPrimePower(BigUint),
    #[error("prime-power exponent must be positive")]
    ZeroExponent,
    #[error("field of order {0} is too large for tables")]
    FieldTooLarge(BigUint),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("{element} is not an element of a field of order {order}")]
    InvalidElement { element: u32, order: u32 },
}
