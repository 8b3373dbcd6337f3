use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{factorize, is_prime, AlgebraError};

/// Largest field order for which arithmetic tables are built.
pub const MAX_TABLE_ORDER: u64 = 1 << 20;

/// `q = p^a` with `p` prime and `a >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: BigUint,
    a: u32,
    q: BigUint,
}

impl PrimePower {
    pub fn new(p: impl Into<BigUint>, a: u32) -> Result<Self, AlgebraError> {
        let p = p.into();
        if a == 0 {
            return Err(AlgebraError::ZeroExponent);
        }
        if !is_prime(&p) {
            return Err(AlgebraError::NotPrime(p));
        }
        let q = p.pow(a);
        Ok(Self { p, a, q })
    }

    /// Recognises `q` as a prime power.
    pub fn from_order(q: impl Into<BigUint>) -> Result<Self, AlgebraError> {
        let q = q.into();
        if q <= BigUint::one() {
            return Err(AlgebraError::NotPrimePower(q));
        }
        let f = factorize(&q, 0)?;
        match f.factors() {
            [(p, a)] => Self::new(p.clone(), *a),
            _ => Err(AlgebraError::NotPrimePower(q)),
        }
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }

    pub fn q_u64(&self) -> Option<u64> {
        self.q.to_u64()
    }
}

impl std::fmt::Display for PrimePower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.a == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.a)
        }
    }
}

/// Polynomial over GF(p), coefficients low degree first, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Poly {
    let mut r: Poly = f.to_vec();
    let dg = g.len() - 1;
    let lead_inv = inv_mod(g[dg], p);
    while r.len() > dg {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            for (i, &gi) in g.iter().enumerate() {
                let idx = top - dg + i;
                r[idx] = (r[idx] + p - c * gi % p) % p;
            }
        }
        r.pop();
        r = trim(r);
        if r.is_empty() {
            break;
        }
    }
    trim(r)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Monic polynomials of the given degree, in the module's lexicographic order.
fn monic_polys(degree: usize, p: u64) -> impl Iterator<Item = Poly> {
    let count = p.pow(degree as u32);
    (0..count).map(move |mut idx| {
        // c0 is the most significant digit of the enumeration index
        let mut coeffs = vec![0u64; degree + 1];
        for i in (0..degree).rev() {
            coeffs[i] = idx % p;
            idx /= p;
        }
        coeffs[degree] = 1;
        coeffs
    })
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for g in monic_polys(d, p) {
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// GF(q) with elements encoded as integers `Σ c_i p^i` for the residue
/// `Σ c_i t^i` modulo a fixed irreducible polynomial.
#[derive(Clone, Debug)]
pub struct FieldTable {
    prime_power: PrimePower,
    p: u32,
    q: u32,
    modulus: Vec<u64>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FieldTable {
    pub fn new(prime_power: PrimePower) -> Result<Self, AlgebraError> {
        let q = prime_power
            .q_u64()
            .filter(|&q| q <= MAX_TABLE_ORDER)
            .ok_or_else(|| AlgebraError::FieldTooLarge(prime_power.q().clone()))?;
        let p = prime_power.p().to_u64().expect("p <= q");
        let a = prime_power.a() as usize;

        let modulus = monic_polys(a, p)
            .find(|f| is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists");

        let encode = |c: &[u64]| c.iter().rev().fold(0u64, |acc, &x| acc * p + x) as u32;
        let decode = |mut x: u64| {
            let mut c = vec![0u64; a];
            for ci in c.iter_mut() {
                *ci = x % p;
                x /= p;
            }
            c
        };
        let slow_mul = |x: u32, y: u32| -> u32 {
            let (cx, cy) = (decode(x as u64), decode(y as u64));
            let mut prod = vec![0u64; 2 * a - 1];
            for (i, &xi) in cx.iter().enumerate() {
                for (j, &yj) in cy.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + xi * yj) % p;
                }
            }
            let mut r = poly_rem(&trim(prod), &modulus, p);
            r.resize(a, 0);
            encode(&r)
        };

        let order = q - 1;
        let order_primes: Vec<u64> = factorize(&BigUint::from(order), 0)?
            .factors()
            .iter()
            .map(|(r, _)| r.to_u64().expect("small"))
            .collect();
        let slow_pow = |x: u32, mut e: u64| {
            let mut acc = 1u32;
            let mut base = x;
            while e > 0 {
                if e & 1 == 1 {
                    acc = slow_mul(acc, base);
                }
                base = slow_mul(base, base);
                e >>= 1;
            }
            acc
        };
        let generator = (1..q as u32)
            .find(|&g| {
                slow_pow(g, order) == 1 && order_primes.iter().all(|&r| slow_pow(g, order / r) != 1)
            })
            .expect("multiplicative group of a field is cyclic");

        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x;
            log[x as usize] = i as u32;
            x = slow_mul(x, generator);
        }
        debug_assert_eq!(x, 1);

        Ok(Self {
            prime_power,
            p: p as u32,
            q: q as u32,
            modulus,
            generator,
            exp,
            log,
        })
    }

    /// Convenience constructor from the field order.
    pub fn with_order(q: u64) -> Result<Self, AlgebraError> {
        Self::new(PrimePower::from_order(q)?)
    }

    pub fn prime_power(&self) -> &PrimePower {
        &self.prime_power
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Coefficients of the monic modulus, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> u32 {
        self.generator
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn check(&self, x: u32) -> Result<u32, AlgebraError> {
        if x < self.q {
            Ok(x)
        } else {
            Err(AlgebraError::InvalidElement {
                element: x,
                order: self.q,
            })
        }
    }

    pub fn add(&self, mut x: u32, mut y: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, mut x: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, x: u32, y: u32) -> u32 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        if x == 0 || y == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[x as usize] as u64 + self.log[y as usize] as u64) % n as u64;
        self.exp[s as usize]
    }

    pub fn inv(&self, x: u32) -> Result<u32, AlgebraError> {
        if x == 0 {
            return Err(AlgebraError::ZeroInverse);
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[x as usize]) % n) as usize])
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if x == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[x as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Discrete log base the primitive element; `None` for zero.
    pub fn log(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    /// Image of `c` in the prime subfield.
    pub fn from_int(&self, c: u64) -> u32 {
        (c % self.p as u64) as u32
    }
}
