use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{divisors, factorize, primality, Primality};

use super::EliminationError;

/// A block size `k` and a prime `λ = k(k-1)/(v-1)` that survive the
/// arithmetic constraints for some `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub k: BigUint,
    pub lambda: BigUint,
    /// `ProbablePrime` when λ is above 2^64.
    pub lambda_primality: Primality,
    /// `gcd(p, v-1) = 1` for the requested characteristic, when one was given.
    pub tits_coprime: Option<bool>,
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.lambda)
    }
}

/// `k(k-1) = λ(v-1)` and `λv < k²`.
pub fn basic_constraints(v: &BigUint, k: &BigUint, lambda: &BigUint) -> bool {
    if k.is_zero() || v.is_zero() {
        return false;
    }
    k * (k - 1u32) == lambda * (v - 1u32) && lambda * v < k * k
}

/// `k | λd` for every nontrivial subdegree `d`. `subdegrees` is the full
/// multiset including the fixed point's 1, which is skipped once.
pub fn subdegree_condition(k: u64, lambda: u64, subdegrees: &[usize]) -> bool {
    let mut skipped = false;
    subdegrees.iter().all(|&d| {
        if d == 1 && !skipped {
            skipped = true;
            return true;
        }
        (lambda as u128 * d as u128) % k as u128 == 0
    })
}

/// Tests one candidate `k` against all constraints other than `k | k_bound`.
pub fn admissible_k(v: &BigUint, k: &BigUint, required_lambda: Option<&BigUint>) -> Option<(BigUint, Primality)> {
    let v1 = v - 1u32;
    let two = BigUint::from(2u32);
    if *k <= two || *k >= v1 {
        return None;
    }
    let (lambda, rem) = (k * (k - 1u32)).div_rem(&v1);
    if !rem.is_zero() {
        return None;
    }
    if required_lambda.is_some_and(|l| *l != lambda) {
        return None;
    }
    if &lambda * v >= k * k {
        return None;
    }
    let pr = primality(&lambda);
    pr.is_prime().then_some((lambda, pr))
}

/// All divisors `k` of `k_bound` with `2 < k < v-1` such that
/// `λ = k(k-1)/(v-1)` is a prime with `λv < k²`, ascending in `k`.
///
/// `v < 4` admits nothing and yields an empty list.
pub fn admissible(
    v: &BigUint,
    k_bound: &BigUint,
    required_lambda: Option<&BigUint>,
    tits_p: Option<u64>,
    seed: u64,
) -> Result<Vec<AdmissiblePair>, EliminationError> {
    if *v < BigUint::from(4u32) || k_bound.is_zero() {
        return Ok(Vec::new());
    }
    let f = factorize(k_bound, seed)?;
    let lo = BigUint::from(3u32);
    let hi = v - 2u32;
    let tits = tits_p.map(|p| (v - 1u32).gcd(&BigUint::from(p)).is_one());
    Ok(divisors(&f, &lo, &hi)
        .into_iter()
        .filter_map(|k| {
            admissible_k(v, &k, required_lambda).map(|(lambda, lambda_primality)| AdmissiblePair {
                k,
                lambda,
                lambda_primality,
                tits_coprime: tits,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: u64, bound: u64, lambda: Option<u64>) -> Vec<(u64, u64)> {
        let l = lambda.map(BigUint::from);
        admissible(&v.into(), &bound.into(), l.as_ref(), None, 0)
            .unwrap()
            .into_iter()
            .map(|p| (p.k.try_into().unwrap(), p.lambda.try_into().unwrap()))
            .collect()
    }

    #[test]
    fn table_one_rows() {
        assert_eq!(pairs(7, 24, None), vec![(4, 2)]);
        assert_eq!(pairs(11, 60, None), vec![(5, 2), (6, 3)]);
        assert_eq!(pairs(45, 576, None), vec![(12, 3)]);
    }

    #[test]
    fn eliminated_rows() {
        assert!(pairs(28431, 645120, None).is_empty());
        assert!(pairs(325, 360, Some(5)).is_empty());
    }

    #[test]
    fn required_lambda_filters() {
        assert_eq!(pairs(11, 60, Some(3)), vec![(6, 3)]);
        assert!(pairs(11, 60, Some(7)).is_empty());
    }

    #[test]
    fn unitary_parabolic_row_is_arithmetically_consistent() {
        assert_eq!(pairs(891, 446, None), vec![(446, 223)]);
        assert_eq!(BigUint::from(223u32) * 890u32, BigUint::from(446u32 * 445));
    }

    #[test]
    fn tits_side_condition() {
        let r = admissible(&11u32.into(), &60u32.into(), None, Some(5), 0).unwrap();
        assert!(r.iter().all(|p| p.tits_coprime == Some(false)));
        let r = admissible(&11u32.into(), &60u32.into(), None, Some(3), 0).unwrap();
        assert!(r.iter().all(|p| p.tits_coprime == Some(true)));
    }

    #[test]
    fn degenerate_inputs() {
        assert!(pairs(3, 60, None).is_empty());
        assert!(pairs(11, 0, None).is_empty());
    }

    #[test]
    fn subdegrees() {
        assert!(subdegree_condition(12, 3, &[1, 12, 32]));
        assert!(subdegree_condition(4, 2, &[1, 6]));
        assert!(subdegree_condition(5, 2, &[1, 10]));
        assert!(subdegree_condition(6, 3, &[1, 10]));
        assert!(!subdegree_condition(6, 3, &[1, 7]));
    }
}
