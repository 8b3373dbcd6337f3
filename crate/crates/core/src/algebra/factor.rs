//! Integer factorization and divisor enumeration.
//!
//! Trial division by the primes below 10^6 removes everything the catalog
//! cares about in practice; whatever is left goes through Brent's variant of
//! Pollard rho with a deterministic schedule of polynomial constants.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::{is_prime, is_prime_u64, mul_mod, small_primes};
use super::AlgebraError;

/// Rho iterations per polynomial constant before moving on.
const RHO_STEPS: u64 = 1 << 22;
/// Number of polynomial constants tried before giving up.
const RHO_ATTEMPTS: u64 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Prime factors with exponents, ascending by prime.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn divisor_count(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (_, e)| acc * BigUint::from(e + 1))
    }

    pub fn reconstruct(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Ascending divisors `d` of the value with `lo <= d <= hi`.
    pub fn divisors(&self, lo: &BigUint, hi: &BigUint) -> Vec<BigUint> {
        divisors(self, lo, hi)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n >= 1`. `seed` offsets the Pollard-rho constant schedule.
pub fn factorize(n: &BigUint, seed: u64) -> Result<Factorization, AlgebraError> {
    if n.is_zero() {
        return Err(AlgebraError::ZeroFactorization);
    }
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();

    if let Some(small) = rest.to_u64() {
        let mut r = small;
        trial_divide_u64(&mut r, &mut primes);
        rest = BigUint::from(r);
    } else {
        trial_divide_big(&mut rest, &mut primes);
    }

    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            primes.push(m);
            continue;
        }
        let d = find_factor(&m, seed)?;
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }

    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization {
        value: n.clone(),
        factors,
    })
}

fn trial_divide_u64(n: &mut u64, out: &mut Vec<BigUint>) {
    trial_divide_u64_from(n, out, 0);
}

fn trial_divide_big(n: &mut BigUint, out: &mut Vec<BigUint>) {
    for (i, &p) in small_primes().iter().enumerate() {
        if let Some(small) = n.to_u64() {
            let mut r = small;
            // hand the remainder to the fast path, starting from this prime
            trial_divide_u64_from(&mut r, out, i);
            *n = BigUint::from(r);
            return;
        }
        let bp = BigUint::from(p);
        loop {
            let (q, r) = n.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            *n = q;
            out.push(bp.clone());
        }
    }
}

fn trial_divide_u64_from(n: &mut u64, out: &mut Vec<BigUint>, start: usize) {
    for (i, &p) in small_primes().iter().enumerate().skip(start) {
        if p.saturating_mul(p) > *n {
            break;
        }
        while *n % p == 0 {
            *n /= p;
            out.push(BigUint::from(p));
        }
        // a large prime cofactor is common; stop once that is all that is left
        if i % 256 == 255 && is_prime_u64(*n) {
            break;
        }
    }
    if *n > 1 && is_prime_u64(*n) {
        out.push(BigUint::from(*n));
        *n = 1;
    }
}

fn find_factor(n: &BigUint, seed: u64) -> Result<BigUint, AlgebraError> {
    if n.is_even() {
        return Ok(BigUint::from(2u32));
    }
    for attempt in 0..RHO_ATTEMPTS {
        let c = seed.wrapping_add(attempt) % 1_000_000 + 1;
        let found = match n.to_u64() {
            Some(m) => brent_u64(m, c).map(BigUint::from),
            None => brent_big(n, c),
        };
        if let Some(d) = found {
            return Ok(d);
        }
    }
    Err(AlgebraError::FactorTimeout(n.clone()))
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's cycle finding on x -> x^2 + c, batching gcds 128 at a time.
fn brent_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
    let mut y = 2 % n;
    let mut r: u64 = 1;
    let mut q: u64 = 1;
    let mut g: u64 = 1;
    let mut x = y;
    let mut ys = y;
    let mut steps = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..(128.min(r - k)) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += 128;
            steps += 128;
        }
        r *= 2;
        if steps > RHO_STEPS {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn brent_big(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut steps = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..(128.min(r - k)) {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += 128;
            steps += 128;
        }
        r *= 2;
        if steps > RHO_STEPS {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// Every divisor `d` of `f.value()` with `lo <= d <= hi`, ascending, each once.
pub fn divisors(f: &Factorization, lo: &BigUint, hi: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    if lo > hi {
        return out;
    }
    fn walk(
        factors: &[(BigUint, u32)],
        idx: usize,
        current: BigUint,
        lo: &BigUint,
        hi: &BigUint,
        out: &mut Vec<BigUint>,
    ) {
        if idx == factors.len() {
            if &current >= lo {
                out.push(current);
            }
            return;
        }
        let (p, e) = &factors[idx];
        let mut d = current;
        for i in 0..=*e {
            if &d > hi {
                break;
            }
            let next = if i < *e { Some(&d * p) } else { None };
            walk(factors, idx + 1, d, lo, hi, out);
            match next {
                Some(n) => d = n,
                None => break,
            }
        }
    }
    walk(&f.factors, 0, BigUint::one(), lo, hi, &mut out);
    out.sort();
    out
}
