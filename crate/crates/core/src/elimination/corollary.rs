use std::fmt;

use crate::algebra::is_prime_u64;

use super::EliminationError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCase {
    /// `(λ²(λ+2), λ(λ+1), λ)`.
    B,
    /// `((λ+6)(λ²+4λ-1)/4, λ(λ+5)/2, λ)`.
    C,
}

/// Parameters `(v, k, λ)` together with a partition into `d` classes of size
/// `c` meeting every block in 0 or `l` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyTuple {
    pub case: FamilyCase,
    pub v: u128,
    pub k: u128,
    pub lambda: u128,
    pub c: u128,
    pub d: u128,
    pub l: u128,
}

impl FamilyTuple {
    pub fn identity_holds(&self) -> bool {
        self.k * (self.k - 1) == self.lambda * (self.v - 1) && self.c * self.d == self.v
    }
}

impl fmt::Display for FamilyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let case = match self.case {
            FamilyCase::B => "b",
            FamilyCase::C => "c",
        };
        write!(
            f,
            "({case}) (v,k,λ)=({},{},{}) (c,d,l)=({},{},{})",
            self.v, self.k, self.lambda, self.c, self.d, self.l
        )
    }
}

/// Largest λ accepted; keeps every entry inside `u128`.
pub const MAX_FAMILY_LAMBDA: u64 = 1 << 32;

/// The parameter tuples of the point-imprimitive cases for a prime λ.
pub fn corollary_families(lambda: u64) -> Result<Vec<FamilyTuple>, EliminationError> {
    if !is_prime_u64(lambda) {
        return Err(EliminationError::NotPrime(lambda));
    }
    if lambda > MAX_FAMILY_LAMBDA {
        return Err(EliminationError::OutOfRange {
            bound: format!("λ={lambda}"),
            detail: format!("needs λ <= {MAX_FAMILY_LAMBDA}"),
        });
    }
    let l = lambda as u128;
    let v = l * l * (l + 2);
    let k = l * (l + 1);
    let mut out = vec![
        FamilyTuple {
            case: FamilyCase::B,
            v,
            k,
            lambda: l,
            c: l * l,
            d: l + 2,
            l,
        },
        FamilyTuple {
            case: FamilyCase::B,
            v,
            k,
            lambda: l,
            c: l + 2,
            d: l * l,
            l: 2,
        },
    ];
    let quad = l * l + 4 * l - 1;
    if matches!(lambda % 6, 1 | 3) && quad % 4 == 0 {
        let d = quad / 4;
        out.push(FamilyTuple {
            case: FamilyCase::C,
            v: (l + 6) * d,
            k: l * (l + 5) / 2,
            lambda: l,
            c: l + 6,
            d,
            l: 3,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(t: &FamilyTuple) -> (u128, u128, u128, u128, u128, u128) {
        (t.v, t.k, t.lambda, t.c, t.d, t.l)
    }

    #[test]
    fn lambda_three() {
        let f = corollary_families(3).unwrap();
        let got: Vec<_> = f.iter().map(triple).collect();
        assert_eq!(got, vec![(45, 12, 3, 9, 5, 3), (45, 12, 3, 5, 9, 2), (45, 12, 3, 9, 5, 3)]);
        assert_eq!(f[2].case, FamilyCase::C);
    }

    #[test]
    fn lambda_seven() {
        let f = corollary_families(7).unwrap();
        assert_eq!((f[0].v, f[0].k, f[0].lambda), (441, 56, 7));
        assert_eq!(triple(&f[2]), (247, 42, 7, 13, 19, 3));
    }

    #[test]
    fn lambda_five_has_no_case_c() {
        let f = corollary_families(5).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|t| t.case == FamilyCase::B));
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(corollary_families(9), Err(EliminationError::NotPrime(9)));
        assert_eq!(corollary_families(1), Err(EliminationError::NotPrime(1)));
    }

    #[test]
    fn identities_for_primes_to_1000() {
        for p in crate::algebra::sieve(1000) {
            for t in corollary_families(p).unwrap() {
                assert!(t.identity_holds(), "{t}");
                if t.case == FamilyCase::C {
                    assert!(matches!(p % 6, 1 | 3));
                }
            }
        }
    }
}
