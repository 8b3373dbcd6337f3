//! Deterministic Schreier–Sims.
//!
//! Base points are chosen as: the caller's prefix first, then the smallest
//! point moved by whichever strong generator still fixes the current base.
//! Transversals are stored as explicit permutations; every group handled here
//! has small degree.

use num_bigint::BigUint;

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing all earlier base points.
    generators: Vec<Permutation>,
    /// `transversal[x]` maps `base_point` to `x`, for `x` in the basic orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base_point: usize, generators: Vec<Permutation>) -> Self {
        let mut level = Level {
            base_point,
            generators,
            transversal: vec![None; degree],
            orbit: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            let ux = self.transversal[x].clone().expect("orbit point has a transversal");
            for g in &self.generators {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(g));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set with basic transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain for `⟨generators⟩` whose base starts with `prefix`.
    pub fn build(degree: usize, generators: &[Permutation], prefix: &[usize]) -> Self {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().expect("non-identity generator"));
            }
        }

        let mut levels: Vec<Level> = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&c| g.apply(c) == c))
                .cloned()
                .collect();
            levels.push(Level::new(degree, b, fixing));
        }

        let mut chain = StabilizerChain { degree, levels };
        chain.complete();
        chain
    }

    /// Sifts Schreier generators level by level, from the bottom of the chain
    /// upward, adding residues until every level is closed.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.find_residue(level) {
                None => i -= 1,
                Some(residue) => {
                    let (h, stopped) = self.sift_from(&residue, level + 1);
                    debug_assert!(!h.is_identity());
                    if stopped == self.levels.len() {
                        let b = h.smallest_moved_point().expect("residue is not the identity");
                        self.levels.push(Level::new(self.degree, b, Vec::new()));
                    }
                    for l in level + 1..=stopped {
                        self.levels[l].generators.push(h.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = stopped as isize;
                }
            }
        }
    }

    /// First Schreier generator at `level` that does not sift through the levels below.
    fn find_residue(&self, level: usize) -> Option<Permutation> {
        let lv = &self.levels[level];
        for &x in &lv.orbit {
            let ux = lv.transversal[x].as_ref().expect("orbit point");
            for s in &lv.generators {
                let y = s.apply(x);
                let uy = lv.transversal[y].as_ref().expect("orbit is closed");
                let schreier = ux.then(s).then(&uy.inverse());
                if schreier.is_identity() {
                    continue;
                }
                let (h, _) = self.sift_from(&schreier, level + 1);
                if !h.is_identity() {
                    return Some(schreier);
                }
            }
        }
        None
    }

    /// Returns the residue and the index of the level where sifting stopped
    /// (`levels.len()` if it passed every level).
    fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, lv) in self.levels.iter().enumerate().skip(start) {
            let x = h.apply(lv.base_point);
            match &lv.transversal[x] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Sizes of the basic orbits, in base order.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).0.is_identity()
    }

    /// Strong generators fixing the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels.get(depth).map(|l| l.generators.clone()).unwrap_or_default()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.stabilizer_generators(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let gens = vec![p("(1,2)", n), Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()];
            let chain = StabilizerChain::build(n, &gens, &[]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn prefix_comes_first_in_base() {
        let gens = vec![p("(1,2,3,4,5)", 5), p("(1,2)", 5)];
        let chain = StabilizerChain::build(5, &gens, &[3]);
        assert_eq!(chain.base()[0], 3);
        assert_eq!(chain.order(), BigUint::from(120u32));
        for g in chain.stabilizer_generators(1) {
            assert_eq!(g.apply(3), 3);
        }
    }

    #[test]
    fn trivial_group_has_empty_base() {
        let chain = StabilizerChain::build(4, &[Permutation::identity(4)], &[]);
        assert!(chain.base().is_empty());
        assert_eq!(chain.order(), BigUint::from(1u32));
    }
}
