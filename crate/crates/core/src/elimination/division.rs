use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::EliminationError;

/// Sparse univariate polynomial in `q` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly(BTreeMap<u32, i64>);

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * q^e`.
    pub fn monomial(c: i64, e: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, e);
        p
    }

    /// Builds from `(coefficient, exponent)` terms; repeated exponents add up.
    pub fn from_terms(terms: &[(i64, u32)]) -> Self {
        let mut p = Self::zero();
        for &(c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    fn add_term(&mut self, c: i64, e: u32) {
        let slot = self.0.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn coefficient(&self, e: u32) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn eval(&self, q: i128) -> i128 {
        self.0.iter().map(|(&e, &c)| c as i128 * q.pow(e)).sum()
    }

    /// Quotient and remainder on division by the monic `q^j - 1`.
    pub fn div_rem_q_pow_minus_one(&self, j: u32) -> (IntPoly, IntPoly) {
        assert!(j > 0);
        let mut rem = self.clone();
        let mut quo = IntPoly::zero();
        while let Some(d) = rem.degree().filter(|&d| d >= j) {
            let c = rem.coefficient(d);
            quo.add_term(c, d - j);
            rem.add_term(-c, d);
            rem.add_term(c, d - j);
        }
        (quo, rem)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.0 {
            out.add_term(c, e);
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.0 {
            out.add_term(-c, e);
        }
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &rhs.0 {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.0.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let a = c.unsigned_abs();
            write!(f, "{sign}")?;
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "q^{e}")?,
                (_, 1) => write!(f, "{a}q")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `g_n(q) = q^(2n-1) + q^(n+2) - q^(n+1) - q^n - q^(n-1) + q^5 - q^4 - q^3 + q + 1`.
pub fn g_poly(n: u32) -> IntPoly {
    IntPoly::from_terms(&[
        (1, 2 * n - 1),
        (1, n + 2),
        (-1, n + 1),
        (-1, n),
        (-1, n - 1),
        (1, 5),
        (-1, 4),
        (-1, 3),
        (1, 1),
        (1, 0),
    ])
}

/// The tabulated `(h_j, r_j)` for `j = n - t`, copied term by term.
pub fn table2_row(n: u32, t: u32) -> Result<(IntPoly, IntPoly), EliminationError> {
    check_range(n, t)?;
    let (h, r): (&[(i64, u32)], &[(i64, u32)]) = match t {
        3 => (
            &[(1, n + 2), (2, 5), (-1, 4), (-1, 3), (-1, 2)],
            &[(3, 5), (-2, 4), (-2, 3), (-1, 2), (1, 1), (1, 0)],
        ),
        4 => (
            &[(1, n + 3), (1, 7), (1, 6), (-1, 5), (-1, 4), (-1, 3)],
            &[(1, 7), (1, 6), (-2, 4), (-2, 3), (1, 1), (1, 0)],
        ),
        5 => (
            &[(1, n + 4), (1, 9), (1, 7), (-1, 6), (-1, 5), (-1, 4)],
            &[(1, 9), (1, 7), (-1, 6), (-2, 4), (-1, 3), (1, 1), (1, 0)],
        ),
        _ => (
            &[(1, n + 5), (1, 11), (1, 8), (-1, 7), (-1, 6), (-1, 5), (1, 2)],
            &[(1, 8), (-1, 7), (-1, 6), (-1, 4), (-1, 3), (1, 2), (1, 1), (1, 0)],
        ),
    };
    Ok((IntPoly::from_terms(h), IntPoly::from_terms(r)))
}

fn check_range(n: u32, t: u32) -> Result<(), EliminationError> {
    if !(3..=6).contains(&t) || n < 7 || n < t + 2 {
        return Err(EliminationError::OutOfRange {
            bound: format!("division identity n={n} t={t}"),
            detail: "needs n >= 7, t in 3..=6 and j = n-t >= 2".into(),
        });
    }
    Ok(())
}

/// `g_n - (h (q^j - 1) + r)`; zero exactly when the identity holds.
pub fn division_residual(n: u32, j: u32, h: &IntPoly, r: &IntPoly) -> IntPoly {
    let qj = IntPoly::from_terms(&[(1, j), (-1, 0)]);
    &g_poly(n) - &(&(h * &qj) + r)
}

/// Whether `g_n = h_j (q^j - 1) + r_j` holds coefficient-wise for the
/// tabulated row `j = n - t`.
pub fn check_division_identity(n: u32, t: u32) -> Result<bool, EliminationError> {
    let (h, r) = table2_row(n, t)?;
    Ok(division_residual(n, n - t, &h, &r).is_zero())
}
