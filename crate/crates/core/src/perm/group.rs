use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{BlockSystem, PermError, Permutation, StabilizerChain};

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and cached; construction is idempotent so concurrent first use
/// is safe.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    /// One generator per non-empty line, in 1-based disjoint-cycle notation.
    pub fn parse_generators<S: AsRef<str>>(lines: &[S], degree: usize) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut gens = Vec::new();
        for line in lines {
            let line = line.as_ref().trim();
            if line.is_empty() {
                continue;
            }
            gens.push(Permutation::parse_cycles(line, degree)?);
        }
        Self::new(degree, gens)
    }

    /// Parses a group file: `degree N` followed by one generator per line.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn from_group_file(text: &str) -> Result<Self, PermError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| PermError::Malformed("empty group file".into()))?;
        let degree = header
            .strip_prefix("degree")
            .map(str::trim)
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| PermError::Malformed(format!("expected `degree N`, found `{header}`")))?;
        let rest: Vec<&str> = lines.collect();
        Self::parse_generators(&rest, degree)
    }

    pub fn to_group_file(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    fn check_point(&self, point: usize) -> Result<(), PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point: point + 1,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// Orbit of `point`, sorted ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut orbit = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orb = self.orbit(p).expect("point in range");
            for &x in &orb {
                assigned[x] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    fn require_transitive(&self) -> Result<(), PermError> {
        if self.is_transitive() {
            Ok(())
        } else {
            Err(PermError::NotTransitive)
        }
    }

    /// Stabilizer of `point`, generated by the strong generators below the
    /// first level of a chain whose base starts at `point`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermutationGroup, PermError> {
        self.check_point(point)?;
        let chain = StabilizerChain::build(self.degree, &self.generators, &[point]);
        let stab = PermutationGroup::new(self.degree, chain.stabilizer_generators(1))?;
        Ok(stab)
    }

    /// Sorted orbit lengths of the stabilizer of `point`.
    pub fn subdegrees(&self, point: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(point)?;
        self.require_transitive()?;
        let stab = self.point_stabilizer(point)?;
        let mut lens: Vec<usize> = stab.orbits().iter().map(Vec::len).collect();
        lens.sort_unstable();
        Ok(lens)
    }

    /// Finest G-invariant partition in which `alpha` and `beta` share a class.
    pub fn block_system_joining(&self, alpha: usize, beta: usize) -> Result<BlockSystem, PermError> {
        self.check_point(alpha)?;
        self.check_point(beta)?;
        self.require_transitive()?;
        if alpha == beta {
            return Err(PermError::EqualPoints);
        }
        let mut uf = UnionFind::new(self.degree);
        uf.union(alpha, beta);
        let mut queue = vec![(alpha, beta)];
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let a = uf.find(g.apply(x));
                let b = uf.find(g.apply(y));
                if a != b {
                    uf.union(a, b);
                    queue.push((a, b));
                }
            }
        }
        let roots: Vec<usize> = (0..self.degree).map(|p| uf.find(p)).collect();
        Ok(BlockSystem::from_labels(&roots))
    }

    /// Smallest block of imprimitivity containing `alpha` and `beta`, sorted.
    pub fn minimal_block(&self, alpha: usize, beta: usize) -> Result<Vec<usize>, PermError> {
        let system = self.block_system_joining(alpha, beta)?;
        Ok(system.class_containing(alpha))
    }

    /// Scans `beta` against the fixed point 0. Returns `None` if primitive,
    /// otherwise the system generated by the smallest block found.
    pub fn imprimitivity_witness(&self) -> Result<Option<BlockSystem>, PermError> {
        self.require_transitive()?;
        let mut best: Option<BlockSystem> = None;
        for beta in 1..self.degree {
            let system = self.block_system_joining(0, beta)?;
            if system.num_classes() == 1 {
                continue;
            }
            let better = best
                .as_ref()
                .map(|b| system.class_size() < b.class_size())
                .unwrap_or(true);
            if better {
                best = Some(system);
            }
        }
        Ok(best)
    }

    pub fn is_primitive(&self) -> Result<bool, PermError> {
        Ok(self.imprimitivity_witness()?.is_none())
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so class labels are schedule independent
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
