//! Primality testing.
//!
//! Below 2^64 the Miller–Rabin test with the first twelve prime bases is
//! deterministic. Above that we run Baillie–PSW (strong base-2 test plus a
//! strong Lucas test with Selfridge parameters), which has no known
//! counterexample but is not a proof; callers that care ask for
//! [`primality`] and get [`Primality::ProbablePrime`].

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Proven prime (deterministic range).
    Prime,
    /// Passed Baillie–PSW; above the deterministic range.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }
}

/// Primes below `limit` by the sieve of Eratosthenes.
pub fn sieve(limit: usize) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j < limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

pub(crate) fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| sieve(1_000_000))
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primality(n: &BigUint) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    for &p in small_primes().iter().take(1000) {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    if !strong_probable_prime(n, &BigUint::from(2u32)) {
        return Primality::Composite;
    }
    if !strong_lucas_probable_prime(n) {
        return Primality::Composite;
    }
    Primality::ProbablePrime
}

pub fn is_prime(n: &BigUint) -> bool {
    primality(n).is_prime()
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let n_int = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n_int).to_biguint().expect("non-negative");
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz % 2 == 1 {
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        a >>= tz;
        if (&a % 4u32) == BigUint::from(3u32) && (&n % 4u32) == BigUint::from(3u32) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = if x.is_odd() { x + n } else { x };
    (x >> 1usize).mod_floor(n)
}

fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &(&root * &root) == n {
        return false;
    }
    // Selfridge: first D in 5, -7, 9, -11, ... with (D/n) = -1
    let mut d_abs: i64 = 5;
    let mut sign: i64 = 1;
    let d = loop {
        let candidate = BigInt::from(sign * d_abs);
        match jacobi(&candidate, n) {
            -1 => break candidate,
            0 => {
                // gcd(D, n) > 1; n is composite unless it equals |D|
                return BigUint::from(d_abs as u64) == *n;
            }
            _ => {}
        }
        d_abs += 2;
        sign = -sign;
    };
    let n_int = BigInt::from_biguint(Sign::Plus, n.clone());
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / BigInt::from(4);
    let q = q.mod_floor(&n_int);

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let k = &n_plus_1 >> s;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.clone();
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(&n_int);
        v = (&v * &v - (&qk << 1usize)).mod_floor(&n_int);
        qk = (&qk * &qk).mod_floor(&n_int);
        if k.bit(i) {
            let u_next = half_mod(&p * &u + &v, &n_int);
            let v_next = half_mod(&d * &u + &p * &v, &n_int);
            u = u_next;
            v = v_next;
            qk = (&qk * &q).mod_floor(&n_int);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - (&qk << 1usize)).mod_floor(&n_int);
        qk = (&qk * &qk).mod_floor(&n_int);
        if v.is_zero() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert!(is_prime(&BigUint::from(223u32)));
        assert!(!is_prime(&BigUint::from(1u32)));
        assert!(!is_prime(&BigUint::from(0u32)));
        // 3^4 * 40 + 1 = 7 * 463
        assert!(!is_prime(&BigUint::from(3241u32)));
        assert!(is_prime(&BigUint::from(2u32)));
    }

    #[test]
    fn agrees_with_sieve_below_one_million() {
        let primes = sieve(1_000_000);
        let mut flags = vec![false; 1_000_000];
        for p in primes {
            flags[p as usize] = true;
        }
        for (n, &f) in flags.iter().enumerate() {
            assert_eq!(is_prime_u64(n as u64), f, "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_are_rejected() {
        // strong pseudoprimes to base 2
        for n in [2047u64, 3277, 4033, 4681, 8321, 3_215_031_751, 3_825_123_056_546_413_051] {
            assert!(!is_prime_u64(n), "{n}");
        }
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest prime below 2^64
    }

    #[test]
    fn big_range() {
        let m61 = BigUint::from(2u32).pow(61) - 1u32;
        let m89 = BigUint::from(2u32).pow(89) - 1u32;
        let m127 = BigUint::from(2u32).pow(127) - 1u32;
        assert_eq!(primality(&m61), Primality::Prime);
        assert_eq!(primality(&m89), Primality::ProbablePrime);
        assert_eq!(primality(&m127), Primality::ProbablePrime);
        assert_eq!(primality(&(&m89 * &m61)), Primality::Composite);
        let m67 = BigUint::from(2u32).pow(67) - 1u32; // 193707721 * 761838257287
        assert_eq!(primality(&m67), Primality::Composite);
        let sq = &m89 * &m89;
        assert_eq!(primality(&sq), Primality::Composite);
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for n in [3u64, 5, 7, 11, 13, 101] {
            for a in 0..n {
                let euler = pow_mod(a, (n - 1) / 2, n);
                let expected = if euler == 0 {
                    0
                } else if euler == 1 {
                    1
                } else {
                    -1
                };
                assert_eq!(jacobi(&BigInt::from(a), &BigUint::from(n)), expected);
            }
        }
        assert_eq!(jacobi(&BigInt::from(-7), &BigUint::from(11u32)), 1);
    }

    #[test]
    fn lucas_accepts_primes_and_rejects_lucas_composites() {
        for p in [5u64, 7, 11, 13, 101, 1_000_003] {
            assert!(strong_lucas_probable_prime(&BigUint::from(p)), "{p}");
        }
        // odd composites with no small factor that are not strong Lucas pseudoprimes
        for c in [1_000_003u64 * 1_000_033, 999_983 * 999_979] {
            assert!(!strong_lucas_probable_prime(&BigUint::from(c)), "{c}");
        }
        // 5459 is the smallest strong Lucas pseudoprime
        assert!(strong_lucas_probable_prime(&BigUint::from(5459u32)));
    }
}
