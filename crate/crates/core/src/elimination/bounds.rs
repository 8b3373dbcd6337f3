use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::PrimePower;

use super::families::{sl_order, so_even_order, so_odd_order, sp_order, su_order};
use super::EliminationError;

/// The inequality lemmas, each with the parameters it is stated for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    /// `q^(n²-2) < |PSL_n(q)| <= |SL_n(q)| < (1-q^-2) q^(n²-1)`, `n >= 2`.
    Linear { n: u32, q: u64 },
    /// `(1-q^-1) q^(n²-2) < |PSU_n(q)| <= |SU_n(q)| < (1-q^-2)(1+q^-3) q^(n²-1)`, `n >= 2`.
    Unitary { n: u32, q: u64 },
    /// `q^(n(n-1)/2)/4 < |Ω_n(q)| < |SO_n(q)| <= (1-q^-2)(1-q^-4) q^(n(n-1)/2)`, odd `n >= 5`, odd `q`.
    Orthogonal { n: u32, q: u64 },
    /// `q^(n(n+1)/2)/(2β) < |PSp_n(q)| <= |Sp_n(q)| <= (1-q^-2)(1-q^-4) q^(n(n+1)/2)`, even `n >= 4`.
    Symplectic { n: u32, q: u64 },
    /// `q^(n(n-1)/2)/8 < |PΩ^±_n(q)| < |SO^±_n(q)| <= δ(1-q^-2)(1-q^-4)(1+q^(-n/2)) q^(n(n-1)/2)`, even `n >= 6`.
    OrthogonalEven { n: u32, q: u64, plus: bool },
    /// `(t!)^3 < 5^(t²-3t+1)`, `t >= 5`.
    FactorialFive { t: u32 },
    /// `(t!)^3 < 2^(4t(t-3))`, `t >= 4`.
    FactorialTwo { t: u32 },
    /// `q^(n(n-1)/2) < prod(q^j-1) < prod(q^j-(-1)^j) < q^((n²+n-2)/2)`, `n >= 3`.
    Product { n: u32, q: u64 },
    /// `|X| < |Out(X)|² |H∩X|³`.
    LargeSubgroup { x: BigUint, out: BigUint, h: BigUint },
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Linear { n, q } => write!(f, "linear n={n} q={q}"),
            Bound::Unitary { n, q } => write!(f, "unitary n={n} q={q}"),
            Bound::Orthogonal { n, q } => write!(f, "orthogonal n={n} q={q}"),
            Bound::Symplectic { n, q } => write!(f, "symplectic n={n} q={q}"),
            Bound::OrthogonalEven { n, q, plus } => {
                write!(f, "orthogonal{} n={n} q={q}", if *plus { "+" } else { "-" })
            }
            Bound::FactorialFive { t } => write!(f, "factorial(5) t={t}"),
            Bound::FactorialTwo { t } => write!(f, "factorial(2) t={t}"),
            Bound::Product { n, q } => write!(f, "product n={n} q={q}"),
            Bound::LargeSubgroup { x, out, h } => write!(f, "large-subgroup |X|={x} out={out} h={h}"),
        }
    }
}

fn rat(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

fn q_pow(q: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(q));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

fn one_minus(q: u64, e: i64) -> BigRational {
    BigRational::one() - q_pow(q, -e)
}

fn one_plus(q: u64, e: i64) -> BigRational {
    BigRational::one() + q_pow(q, -e)
}

fn frac(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn out_of_range(bound: &Bound, detail: &str) -> EliminationError {
    EliminationError::OutOfRange {
        bound: bound.to_string(),
        detail: detail.to_string(),
    }
}

fn prime_power(bound: &Bound, q: u64) -> Result<BigUint, EliminationError> {
    PrimePower::from_order(q)
        .map(|pp| pp.q().clone())
        .map_err(|_| out_of_range(bound, "q is not a prime power"))
}

/// Evaluates both sides of the lemma exactly and reports whether every
/// stated inequality holds.
pub fn check_bounds(bound: &Bound) -> Result<bool, EliminationError> {
    let ok = match *bound {
        Bound::Linear { n, q } => {
            if n < 2 {
                return Err(out_of_range(bound, "needs n >= 2"));
            }
            let qq = prime_power(bound, q)?;
            let sl = sl_order(n, &qq);
            let psl = &sl / (&qq - 1u32).gcd(&BigUint::from(n));
            let n2 = (n * n) as i64;
            q_pow(q, n2 - 2) < rat(&psl) && psl <= sl && rat(&sl) < one_minus(q, 2) * q_pow(q, n2 - 1)
        }
        Bound::Unitary { n, q } => {
            if n < 2 {
                return Err(out_of_range(bound, "needs n >= 2"));
            }
            let qq = prime_power(bound, q)?;
            let su = su_order(n, &qq);
            let psu = &su / (&qq + 1u32).gcd(&BigUint::from(n));
            let n2 = (n * n) as i64;
            one_minus(q, 1) * q_pow(q, n2 - 2) < rat(&psu)
                && psu <= su
                && rat(&su) < one_minus(q, 2) * one_plus(q, 3) * q_pow(q, n2 - 1)
        }
        Bound::Orthogonal { n, q } => {
            if n < 5 || n % 2 == 0 || q % 2 == 0 {
                return Err(out_of_range(bound, "needs odd n >= 5 and odd q"));
            }
            let qq = prime_power(bound, q)?;
            let so = so_odd_order(n, &qq);
            let omega = &so / 2u32;
            let e = (n * (n - 1) / 2) as i64;
            frac(1, 4) * q_pow(q, e) < rat(&omega)
                && omega < so
                && rat(&so) <= one_minus(q, 2) * one_minus(q, 4) * q_pow(q, e)
        }
        Bound::Symplectic { n, q } => {
            if n < 4 || n % 2 == 1 {
                return Err(out_of_range(bound, "needs even n >= 4"));
            }
            let qq = prime_power(bound, q)?;
            let sp = sp_order(n, &qq);
            let beta: i64 = if q % 2 == 1 { 2 } else { 1 };
            let psp = &sp / beta as u32;
            let e = (n * (n + 1) / 2) as i64;
            frac(1, 2 * beta) * q_pow(q, e) < rat(&psp)
                && psp <= sp
                && rat(&sp) <= one_minus(q, 2) * one_minus(q, 4) * q_pow(q, e)
        }
        Bound::OrthogonalEven { n, q, plus } => {
            if n < 6 || n % 2 == 1 {
                return Err(out_of_range(bound, "needs even n >= 6"));
            }
            let qq = prime_power(bound, q)?;
            let so = so_even_order(n, &qq, plus);
            let m = n / 2;
            let qm = qq.pow(m);
            let d = if plus { qm - 1u32 } else { qm + 1u32 };
            let core = if q % 2 == 0 { &so / 2u32 } else { so.clone() };
            let pomega = core / BigUint::from(4u32).gcd(&d);
            let delta: i64 = if q % 2 == 0 { 2 } else { 1 };
            let e = (n * (n - 1) / 2) as i64;
            frac(1, 8) * q_pow(q, e) < rat(&pomega)
                && pomega < so
                && rat(&so)
                    <= frac(delta, 1) * one_minus(q, 2) * one_minus(q, 4) * one_plus(q, m as i64) * q_pow(q, e)
        }
        Bound::FactorialFive { t } => {
            if t < 5 {
                return Err(out_of_range(bound, "needs t >= 5"));
            }
            let f = factorial(t);
            let e = t * t - 3 * t + 1;
            f.pow(3) < BigUint::from(5u32).pow(e)
        }
        Bound::FactorialTwo { t } => {
            if t < 4 {
                return Err(out_of_range(bound, "needs t >= 4"));
            }
            let f = factorial(t);
            f.pow(3) < BigUint::from(2u32).pow(4 * t * (t - 3))
        }
        Bound::Product { n, q } => {
            if n < 3 {
                return Err(out_of_range(bound, "needs n >= 3"));
            }
            let qq = prime_power(bound, q)?;
            let lower = qq.pow(n * (n - 1) / 2);
            let a = sl_order(n, &qq) / &lower;
            let b = su_order(n, &qq) / &lower;
            let upper = qq.pow((n * n + n - 2) / 2);
            lower < a && a < b && b < upper
        }
        Bound::LargeSubgroup { ref x, ref out, ref h } => {
            if x.is_zero() || h.is_zero() {
                return Err(out_of_range(bound, "orders must be positive"));
            }
            *x < out * out * h.pow(3)
        }
    };
    Ok(ok)
}

fn factorial(t: u32) -> BigUint {
    (1..=t).fold(BigUint::one(), |acc, i| acc * i)
}

/// Prime powers used by the property suites.
pub const BOUND_FIELD_ORDERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Every in-range order bound for `n <= 8` and `q` in [`BOUND_FIELD_ORDERS`].
pub fn order_bound_cases() -> Vec<Bound> {
    let mut out = Vec::new();
    for n in 2..=8u32 {
        for q in BOUND_FIELD_ORDERS {
            out.push(Bound::Linear { n, q });
            out.push(Bound::Unitary { n, q });
            if n >= 5 && n % 2 == 1 && q % 2 == 1 {
                out.push(Bound::Orthogonal { n, q });
            }
            if n >= 4 && n % 2 == 0 {
                out.push(Bound::Symplectic { n, q });
            }
            if n >= 6 && n % 2 == 0 {
                out.push(Bound::OrthogonalEven { n, q, plus: true });
                out.push(Bound::OrthogonalEven { n, q, plus: false });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert!(check_bounds(&Bound::Linear { n: 5, q: 3 }).unwrap());
        assert!(check_bounds(&Bound::FactorialFive { t: 5 }).unwrap());
        assert!(check_bounds(&Bound::Product { n: 3, q: 2 }).unwrap());
        assert!(check_bounds(&Bound::FactorialTwo { t: 4 }).unwrap());
    }

    #[test]
    fn ranges_are_enforced() {
        for b in [
            Bound::Linear { n: 1, q: 2 },
            Bound::FactorialFive { t: 4 },
            Bound::FactorialTwo { t: 3 },
            Bound::Product { n: 2, q: 2 },
            Bound::Symplectic { n: 5, q: 3 },
            Bound::Orthogonal { n: 7, q: 4 },
            Bound::OrthogonalEven { n: 4, q: 3, plus: true },
            Bound::Linear { n: 3, q: 6 },
        ] {
            assert!(matches!(check_bounds(&b), Err(EliminationError::OutOfRange { .. })), "{b}");
        }
    }

    #[test]
    fn large_subgroup() {
        // PSU4(2) with H∩X of order 576
        let b = Bound::LargeSubgroup {
            x: 25920u32.into(),
            out: 2u32.into(),
            h: 576u32.into(),
        };
        assert!(check_bounds(&b).unwrap());
        let b = Bound::LargeSubgroup {
            x: 25920u32.into(),
            out: 1u32.into(),
            h: 29u32.into(),
        };
        assert!(!check_bounds(&b).unwrap());
    }

    #[test]
    fn upper_bound_is_attained_for_sl2_and_su3() {
        // |SL_2(q)| = (1-q^-2) q^3 and |SU_3(q)| = (1-q^-2)(1+q^-3) q^8, so the
        // strict upper bounds fail exactly there
        for q in BOUND_FIELD_ORDERS {
            assert!(!check_bounds(&Bound::Linear { n: 2, q }).unwrap());
            assert!(!check_bounds(&Bound::Unitary { n: 3, q }).unwrap());
            assert!(check_bounds(&Bound::Linear { n: 3, q }).unwrap());
            assert!(check_bounds(&Bound::Unitary { n: 4, q }).unwrap());
        }
    }

    #[test]
    fn order_bounds_hold_in_range() {
        for b in order_bound_cases() {
            assert!(check_bounds(&b).unwrap(), "{b}");
        }
    }
}
