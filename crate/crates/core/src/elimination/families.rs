use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::algebra::PrimePower;

use super::EliminationError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Linear,
    Unitary,
    Symplectic,
    OmegaOdd,
    OmegaPlus,
    OmegaMinus,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Linear,
        Family::Unitary,
        Family::Symplectic,
        Family::OmegaOdd,
        Family::OmegaPlus,
        Family::OmegaMinus,
    ];

    fn label(self) -> &'static str {
        match self {
            Family::Linear => "PSL",
            Family::Unitary => "PSU",
            Family::Symplectic => "PSp",
            Family::OmegaOdd => "Omega",
            Family::OmegaPlus => "POmega+",
            Family::OmegaMinus => "POmega-",
        }
    }
}

/// A finite simple classical group given by family, dimension of the
/// natural module and field order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFamilySpec {
    family: Family,
    n: u32,
    q: PrimePower,
}

fn pow(q: &BigUint, e: u32) -> BigUint {
    q.pow(e)
}

fn gcd_small(a: u64, b: &BigUint) -> BigUint {
    BigUint::from(a).gcd(b)
}

/// `|SL_n(q)| = q^(n(n-1)/2) * prod_{j=2..n} (q^j - 1)`.
pub fn sl_order(n: u32, q: &BigUint) -> BigUint {
    (2..=n).fold(pow(q, n * (n - 1) / 2), |acc, j| acc * (pow(q, j) - 1u32))
}

/// `|SU_n(q)| = q^(n(n-1)/2) * prod_{j=2..n} (q^j - (-1)^j)`.
pub fn su_order(n: u32, q: &BigUint) -> BigUint {
    (2..=n).fold(pow(q, n * (n - 1) / 2), |acc, j| {
        let qj = pow(q, j);
        acc * if j % 2 == 0 { qj - 1u32 } else { qj + 1u32 }
    })
}

/// `q^(m^2) * prod_{j=1..m} (q^(2j) - 1)`: the order of `Sp_2m(q)`, and of
/// `SO_(2m+1)(q)`.
fn sp_like(m: u32, q: &BigUint) -> BigUint {
    (1..=m).fold(pow(q, m * m), |acc, j| acc * (pow(q, 2 * j) - 1u32))
}

pub fn sp_order(n: u32, q: &BigUint) -> BigUint {
    sp_like(n / 2, q)
}

pub fn so_odd_order(n: u32, q: &BigUint) -> BigUint {
    sp_like((n - 1) / 2, q)
}

/// `q^(m(m-1)) (q^m - e) prod_{j=1..m-1} (q^(2j) - 1)`, the common factor of
/// the even-dimensional orthogonal orders.
fn omega_even_core(m: u32, q: &BigUint, plus: bool) -> BigUint {
    let qm = pow(q, m);
    let head = pow(q, m * (m - 1)) * if plus { qm - 1u32 } else { qm + 1u32 };
    (1..m).fold(head, |acc, j| acc * (pow(q, 2 * j) - 1u32))
}

/// `|SO^e_2m(q)|`, twice the core when `q` is even (where SO is the full
/// isometry group).
pub fn so_even_order(n: u32, q: &BigUint, plus: bool) -> BigUint {
    let core = omega_even_core(n / 2, q, plus);
    if q.is_even() {
        core * 2u32
    } else {
        core
    }
}

impl GroupFamilySpec {
    pub fn new(family: Family, n: u32, q: PrimePower) -> Result<Self, EliminationError> {
        let small_q = q.q_u64();
        let bad = |why: &str| Err(EliminationError::InvalidFamily(format!("{}({n},{}): {why}", family.label(), q.q())));
        match family {
            Family::Linear => {
                if n < 2 {
                    return bad("needs n >= 2");
                }
                if n == 2 && matches!(small_q, Some(2 | 3)) {
                    return bad("PSL(2,2) and PSL(2,3) are soluble");
                }
            }
            Family::Unitary => {
                if n < 3 {
                    return bad("needs n >= 3");
                }
                if n == 3 && small_q == Some(2) {
                    return bad("PSU(3,2) is soluble");
                }
            }
            Family::Symplectic => {
                if n < 4 || n % 2 == 1 {
                    return bad("needs even n >= 4");
                }
                if n == 4 && small_q == Some(2) {
                    return bad("PSp(4,2) is not simple");
                }
            }
            Family::OmegaOdd => {
                if n < 7 || n % 2 == 0 {
                    return bad("needs odd n >= 7");
                }
                if q.q().is_even() {
                    return bad("needs q odd");
                }
            }
            Family::OmegaPlus | Family::OmegaMinus => {
                if n < 8 || n % 2 == 1 {
                    return bad("needs even n >= 8");
                }
            }
        }
        Ok(Self { family, n, q })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> &PrimePower {
        &self.q
    }

    /// Exact order of the simple group.
    pub fn simple_order(&self) -> BigUint {
        let n = self.n;
        let q = self.q.q();
        match self.family {
            Family::Linear => sl_order(n, q) / (q - 1u32).gcd(&BigUint::from(n)),
            Family::Unitary => su_order(n, q) / (q + 1u32).gcd(&BigUint::from(n)),
            Family::Symplectic => sp_order(n, q) / gcd_small(2, &(q - 1u32)),
            Family::OmegaOdd => so_odd_order(n, q) / gcd_small(2, &(q - 1u32)),
            Family::OmegaPlus | Family::OmegaMinus => {
                let plus = self.family == Family::OmegaPlus;
                let qm = pow(q, n / 2);
                let d = if plus { qm - 1u32 } else { qm + 1u32 };
                omega_even_core(n / 2, q, plus) / gcd_small(4, &d)
            }
        }
    }

    /// `|Out(X)|`.
    pub fn out_order(&self) -> BigUint {
        let n = self.n;
        let q = self.q.q();
        let a = BigUint::from(self.q.a());
        let m = n / 2;
        match self.family {
            Family::Linear if n == 2 => a * gcd_small(2, &(q - 1u32)),
            Family::Linear => a * 2u32 * (q - 1u32).gcd(&BigUint::from(n)),
            Family::Unitary => a * 2u32 * (q + 1u32).gcd(&BigUint::from(n)),
            Family::Symplectic => {
                // graph automorphism of B2 in characteristic 2
                let graph = if m == 2 && q.is_even() { 2u32 } else { 1 };
                a * gcd_small(2, &(q - 1u32)) * graph
            }
            Family::OmegaOdd => a * 2u32,
            Family::OmegaPlus if m == 4 => a * if q.is_even() { 6u32 } else { 24 },
            Family::OmegaPlus => a * 2u32 * gcd_small(4, &(pow(q, m) - 1u32)),
            Family::OmegaMinus => a * 2u32 * gcd_small(4, &(pow(q, m) + 1u32)),
        }
    }

    /// The divisibility facts the elimination arguments rely on, as an upper
    /// bound that `out_order` must divide.
    pub fn out_divides(&self) -> BigUint {
        let a = BigUint::from(self.q.a());
        match self.family {
            Family::OmegaPlus if self.n == 8 => a * 24u32,
            Family::OmegaPlus | Family::OmegaMinus => a * 8u32,
            _ => self.out_order(),
        }
    }

    /// Exponent of `p` in `|X|`.
    pub fn p_exponent(&self) -> u32 {
        let n = self.n;
        let e = match self.family {
            Family::Linear | Family::Unitary => n * (n - 1) / 2,
            Family::Symplectic => (n / 2) * (n / 2),
            Family::OmegaOdd => ((n - 1) / 2) * ((n - 1) / 2),
            Family::OmegaPlus | Family::OmegaMinus => (n / 2) * (n / 2 - 1),
        };
        e * self.q.a()
    }
}

impl fmt::Display for GroupFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family.label(), self.n, self.q.q())
    }
}

impl FromStr for GroupFamilySpec {
    type Err = EliminationError;

    /// Parses `PSL(n,q)`, `PSU(n,q)`, `PSp(n,q)`, `Omega(n,q)`,
    /// `POmega+(n,q)` or `POmega-(n,q)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || EliminationError::InvalidFamily(s.to_string());
        let s = s.trim();
        let (name, rest) = s.split_once('(').ok_or_else(malformed)?;
        let args = rest.strip_suffix(')').ok_or_else(malformed)?;
        let (n, q) = args.split_once(',').ok_or_else(malformed)?;
        let n: u32 = n.trim().parse().map_err(|_| malformed())?;
        let q: BigUint = q.trim().parse().map_err(|_| malformed())?;
        let family = Family::ALL
            .into_iter()
            .find(|f| f.label() == name.trim())
            .ok_or_else(malformed)?;
        if q <= BigUint::one() {
            return Err(malformed());
        }
        let q = PrimePower::from_order(q)?;
        Self::new(family, n, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn spec(s: &str) -> GroupFamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(spec("PSL(2,7)").simple_order(), BigUint::from(168u32));
        assert_eq!(spec("PSL(3,2)").simple_order(), BigUint::from(168u32));
        assert_eq!(spec("PSU(4,2)").simple_order(), BigUint::from(25920u32));
        assert_eq!(spec("PSp(4,3)").simple_order(), BigUint::from(25920u32));
        assert_eq!(spec("PSU(4,2)").simple_order() / 576u32, BigUint::from(45u32));
    }

    #[test]
    fn exceptional_isomorphism_orders() {
        assert_eq!(spec("PSL(2,4)").simple_order(), BigUint::from(60u32));
        assert_eq!(spec("PSL(2,5)").simple_order(), BigUint::from(60u32));
        assert_eq!(spec("PSL(2,9)").simple_order(), BigUint::from(360u32));
        assert_eq!(spec("PSL(4,2)").simple_order(), BigUint::from(20160u32));
    }

    #[test]
    fn outer_orders() {
        assert_eq!(spec("PSL(10,2)").out_order(), BigUint::from(2u32));
        assert_eq!(spec("PSU(4,2)").out_order(), BigUint::from(2u32));
        assert_eq!(spec("Omega(7,3)").out_order(), BigUint::from(2u32));
        assert_eq!(spec("PSL(2,9)").out_order(), BigUint::from(4u32));
        assert_eq!(spec("PSp(4,4)").out_order(), BigUint::from(4u32));
        assert_eq!(spec("POmega+(8,3)").out_order(), BigUint::from(24u32));
        assert_eq!(spec("POmega+(8,2)").out_order(), BigUint::from(6u32));
    }

    #[test]
    fn out_respects_divisibility_facts() {
        for s in ["POmega+(8,3)", "POmega+(8,9)", "POmega+(8,4)", "POmega+(10,3)", "POmega-(8,5)", "POmega-(10,3)"] {
            let x = spec(s);
            assert!((x.out_divides() % x.out_order()).is_zero(), "{s}");
        }
    }

    #[test]
    fn validation() {
        for s in ["PSL(2,2)", "PSL(2,3)", "PSU(3,2)", "PSp(4,2)", "PSp(5,3)", "Omega(7,4)", "Omega(5,3)", "POmega+(6,3)", "PSL(3,6)", "PSL(3,1)", "PSL3,2", "Foo(3,2)"] {
            assert!(s.parse::<GroupFamilySpec>().is_err(), "{s}");
        }
        assert_eq!(spec("POmega-(8,3)").to_string(), "POmega-(8,3)");
    }

    #[test]
    fn catalog_indices_divide() {
        // v = |X:H∩X| for rows whose subgroup order is known
        assert_eq!(spec("Omega(7,3)").simple_order() / 28431u32, BigUint::from(161280u32));
        assert_eq!(spec("PSL(10,2)").simple_order() % 109221651u32, BigUint::from(0u32));
    }
}
