use std::collections::VecDeque;
use std::fmt;

use super::ConstructionError;

/// Q8 on 1, -1, i, -i, j, -j, k, -k.
const Q8: [[u8; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 6, 7, 5, 4],
    [3, 2, 0, 1, 7, 6, 4, 5],
    [4, 5, 7, 6, 1, 0, 2, 3],
    [5, 4, 6, 7, 0, 1, 3, 2],
    [6, 7, 4, 5, 3, 2, 1, 0],
    [7, 6, 5, 4, 2, 3, 0, 1],
];
const Q8_NAMES: [&str; 8] = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AmbientKind {
    Cyclic(usize),
    ElementaryAbelian { p: usize, a: u32 },
    /// Direct product of cyclic groups of the given orders.
    Product(Vec<usize>),
    Q8TimesZ2,
}

/// A small finite group given by its multiplication table.
///
/// Elements are numbered in a fixed order: the identity, then by length of
/// the shortest word in the generators, ties broken by comparing those words
/// lexicographically.
#[derive(Clone, PartialEq, Eq)]
pub struct AmbientGroup {
    kind: AmbientKind,
    table: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    names: Vec<String>,
    /// Coordinates for abelian products (empty for Q8 x Z2).
    coords: Vec<Vec<usize>>,
}

pub const MAX_AMBIENT_ORDER: usize = 1024;

impl AmbientGroup {
    pub fn cyclic(n: usize) -> Result<Self, ConstructionError> {
        Self::abelian(AmbientKind::Cyclic(n), vec![n])
    }

    pub fn elementary_abelian(p: usize, a: u32) -> Result<Self, ConstructionError> {
        if !crate::algebra::is_prime_u64(p as u64) {
            return Err(ConstructionError::InvalidAmbient(format!("{p} is not prime")));
        }
        Self::abelian(AmbientKind::ElementaryAbelian { p, a }, vec![p; a as usize])
    }

    pub fn product(orders: &[usize]) -> Result<Self, ConstructionError> {
        Self::abelian(AmbientKind::Product(orders.to_vec()), orders.to_vec())
    }

    pub fn q8_times_z2() -> Self {
        let raw_mul = |x: usize, y: usize| {
            let (qx, zx) = (x % 8, x / 8);
            let (qy, zy) = (y % 8, y / 8);
            Q8[qx][qy] as usize + 8 * ((zx + zy) % 2)
        };
        let raw_names: Vec<String> = (0..16)
            .map(|x| format!("({},{})", Q8_NAMES[x % 8], x / 8))
            .collect();
        // generators i, j, z
        let gens = [2usize, 4, 8];
        let (_, table, names) = canonical(16, &gens, raw_mul, &raw_names);
        Self::from_table(AmbientKind::Q8TimesZ2, table, names, Vec::new())
    }

    fn abelian(kind: AmbientKind, orders: Vec<usize>) -> Result<Self, ConstructionError> {
        if orders.is_empty() || orders.iter().any(|&n| n == 0) {
            return Err(ConstructionError::InvalidAmbient("factor orders must be positive".into()));
        }
        let total = orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .filter(|&n| n <= MAX_AMBIENT_ORDER)
            .ok_or_else(|| ConstructionError::InvalidAmbient("group too large".into()))?;
        // raw encoding: mixed radix, first factor most significant
        let decode = |mut x: usize| {
            let mut c = vec![0usize; orders.len()];
            for i in (0..orders.len()).rev() {
                c[i] = x % orders[i];
                x /= orders[i];
            }
            c
        };
        let encode = |c: &[usize]| c.iter().zip(&orders).fold(0, |acc, (&ci, &n)| acc * n + ci);
        let raw_mul = |x: usize, y: usize| {
            let (cx, cy) = (decode(x), decode(y));
            let sum: Vec<usize> = cx.iter().zip(&cy).zip(&orders).map(|((a, b), n)| (a + b) % n).collect();
            encode(&sum)
        };
        let raw_names: Vec<String> = (0..total)
            .map(|x| {
                let c = decode(x);
                if c.len() == 1 {
                    c[0].to_string()
                } else {
                    let parts: Vec<String> = c.iter().map(usize::to_string).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        let gens: Vec<usize> = (0..orders.len())
            .map(|i| {
                let mut c = vec![0; orders.len()];
                c[i] = 1 % orders[i];
                encode(&c)
            })
            .collect();
        let (raw_of, table, names) = canonical(total, &gens, raw_mul, &raw_names);
        let coords = raw_of.iter().map(|&r| decode(r)).collect();
        Ok(Self::from_table(kind, table, names, coords))
    }

    fn from_table(kind: AmbientKind, table: Vec<Vec<u32>>, names: Vec<String>, coords: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| table[x][y] == 0).expect("group has inverses") as u32)
            .collect();
        Self {
            kind,
            table,
            inverse,
            names,
            coords,
        }
    }

    pub fn kind(&self) -> &AmbientKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y] as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    /// Index of the element with the given coordinates (abelian kinds only).
    pub fn element_from_coords(&self, coords: &[usize]) -> Option<usize> {
        self.coords.iter().position(|c| c == coords)
    }

    pub fn coords(&self, x: usize) -> Option<&[usize]> {
        self.coords.get(x).map(Vec::as_slice)
    }
}

impl fmt::Display for AmbientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AmbientKind::Cyclic(n) => write!(f, "Z{n}"),
            AmbientKind::ElementaryAbelian { p, a } => write!(f, "Z{p}^{a}"),
            AmbientKind::Product(orders) => {
                let parts: Vec<String> = orders.iter().map(|n| format!("Z{n}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            AmbientKind::Q8TimesZ2 => write!(f, "Q8xZ2"),
        }
    }
}

impl fmt::Debug for AmbientGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AmbientGroup({self})")
    }
}

/// Renumbers a raw group so that elements appear in shortlex order of their
/// minimal generator words. Returns the raw element behind each new index,
/// the new multiplication table, and the renumbered names.
fn canonical(
    n: usize,
    gens: &[usize],
    raw_mul: impl Fn(usize, usize) -> usize,
    raw_names: &[String],
) -> (Vec<usize>, Vec<Vec<u32>>, Vec<String>) {
    // the raw identity is 0 in every encoding used here
    let mut index_of = vec![usize::MAX; n];
    let mut raw_of = vec![0usize];
    index_of[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    // BFS visits words in shortlex order when generators are tried in order
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = raw_mul(x, g);
            if index_of[y] == usize::MAX {
                index_of[y] = raw_of.len();
                raw_of.push(y);
                queue.push_back(y);
            }
        }
    }
    debug_assert_eq!(raw_of.len(), n);
    let table = raw_of
        .iter()
        .map(|&x| raw_of.iter().map(|&y| index_of[raw_mul(x, y)] as u32).collect())
        .collect();
    let names = raw_of.iter().map(|&x| raw_names[x].clone()).collect();
    (raw_of, table, names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_group_axioms(g: &AmbientGroup) {
        let n = g.order();
        for x in 0..n {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, 0), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn cyclic_enumeration_is_natural() {
        let g = AmbientGroup::cyclic(11).unwrap();
        assert_eq!(g.order(), 11);
        for x in 0..11 {
            assert_eq!(g.element_name(x), x.to_string());
            assert_eq!(g.element_from_coords(&[x]), Some(x));
        }
        assert_eq!(g.mul(7, 9), 5);
        assert_group_axioms(&g);
    }

    #[test]
    fn products_are_groups() {
        let ea = AmbientGroup::elementary_abelian(2, 4).unwrap();
        assert_eq!(ea.order(), 16);
        assert_eq!(ea.element_name(1), "(1,0,0,0)");
        assert_group_axioms(&ea);
        let z2z8 = AmbientGroup::product(&[2, 8]).unwrap();
        assert_eq!(z2z8.order(), 16);
        assert_eq!(z2z8.to_string(), "Z2xZ8");
        assert_group_axioms(&z2z8);
        assert!(AmbientGroup::elementary_abelian(4, 2).is_err());
    }

    #[test]
    fn q8_times_z2_is_nonabelian() {
        let g = AmbientGroup::q8_times_z2();
        assert_eq!(g.order(), 16);
        assert_group_axioms(&g);
        let nonabelian = (0..16).any(|x| (0..16).any(|y| g.mul(x, y) != g.mul(y, x)));
        assert!(nonabelian);
        // exactly one involution in Q8, three in Q8 x Z2
        let involutions = (1..16).filter(|&x| g.mul(x, x) == 0).count();
        assert_eq!(involutions, 3);
    }
}
