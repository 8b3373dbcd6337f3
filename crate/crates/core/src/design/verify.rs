use std::fmt;

use super::incidence::labels;
use super::{DesignError, IncidenceStructure};

/// Parameters of a symmetric design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DesignParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub nontrivial: bool,
}

impl DesignParams {
    /// Checks `k(k-1) = λ(v-1)`.
    pub fn new(v: usize, k: usize, lambda: usize) -> Option<Self> {
        (v >= 2 && k * (k.wrapping_sub(1)) == lambda * (v - 1) && k <= v).then_some(Self {
            v,
            k,
            lambda,
            nontrivial: 2 < k && k + 1 < v,
        })
    }

    pub fn complement(&self) -> Option<Self> {
        let k = self.v - self.k;
        let lambda = (self.v + self.lambda).checked_sub(2 * self.k)?;
        Self::new(self.v, k, lambda)
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.v, self.k, self.lambda)
    }
}

/// Checks that `d` is a symmetric design and returns its parameters.
///
/// Both the point-pair and the block-pair condition are checked; the second
/// follows from the first for square structures, so a disagreement points at
/// a bug in the incidence code rather than in the input.
pub fn verify_symmetric(d: &IncidenceStructure) -> Result<DesignParams, DesignError> {
    let v = d.v();
    if d.num_blocks() != v {
        return Err(DesignError::BlockCount {
            v,
            blocks: d.num_blocks(),
        });
    }
    if v < 2 {
        return Err(DesignError::TooSmall { v });
    }
    let k = d.block(0).len();
    if let Some(b) = d.blocks().iter().find(|b| b.len() != k) {
        return Err(DesignError::NonUniform {
            block: labels(b),
            size: b.len(),
            expected: k,
        });
    }

    let lambda = d.point_row(0).and_count(d.point_row(1));
    for a in 0..v {
        for b in a + 1..v {
            let count = d.point_row(a).and_count(d.point_row(b));
            if count != lambda {
                return Err(DesignError::PairCount {
                    points: (a + 1, b + 1),
                    count,
                    expected: lambda,
                });
            }
        }
    }

    for x in 0..v {
        for y in x + 1..v {
            let count = d.block_row(x).and_count(d.block_row(y));
            if count != lambda {
                return Err(DesignError::Dual {
                    blocks: (labels(d.block(x)), labels(d.block(y))),
                    count,
                    expected: lambda,
                });
            }
        }
    }

    if let Some(p) = (0..v).find(|&p| d.replication(p) != k) {
        return Err(DesignError::InternalConsistency(format!(
            "point {} lies on {} blocks, expected {k}",
            p + 1,
            d.replication(p)
        )));
    }
    DesignParams::new(v, k, lambda).ok_or_else(|| {
        DesignError::InternalConsistency(format!("k(k-1) != λ(v-1) for ({v},{k},{lambda})"))
    })
}

/// Replaces every block by its complement. The input must be a symmetric design.
pub fn complement(d: &IncidenceStructure) -> Result<IncidenceStructure, DesignError> {
    verify_symmetric(d)?;
    let v = d.v();
    let blocks = d
        .blocks()
        .iter()
        .map(|b| (0..v).filter(|p| b.binary_search(p).is_err()).collect())
        .collect();
    IncidenceStructure::new(v, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> IncidenceStructure {
        let blocks = (0..7).map(|i| vec![(i + 1) % 7, (i + 2) % 7, (i + 4) % 7]).collect();
        IncidenceStructure::new(7, blocks).unwrap()
    }

    #[test]
    fn fano_and_complement() {
        let f = fano();
        let p = verify_symmetric(&f).unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.nontrivial), (7, 3, 1, true));
        let c = complement(&f).unwrap();
        let q = verify_symmetric(&c).unwrap();
        assert_eq!((q.v, q.k, q.lambda), (7, 4, 2));
        assert_eq!(complement(&c).unwrap(), f);
        assert_eq!(p.complement(), Some(q));
    }

    #[test]
    fn four_cycle_witness() {
        let d = IncidenceStructure::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        assert_eq!(
            verify_symmetric(&d),
            Err(DesignError::PairCount {
                points: (1, 3),
                count: 0,
                expected: 1
            })
        );
    }

    #[test]
    fn failure_codes() {
        let d = IncidenceStructure::new(7, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 0]]).unwrap();
        assert!(matches!(verify_symmetric(&d), Err(DesignError::BlockCount { v: 7, blocks: 4 })));
        let d = IncidenceStructure::new(3, vec![vec![0, 1], vec![1, 2], vec![0]]).unwrap();
        assert!(matches!(verify_symmetric(&d), Err(DesignError::NonUniform { .. })));
        assert!(complement(&d).is_err());
    }

    #[test]
    fn trivial_designs() {
        // all (v-1)-subsets: k = v-1, λ = v-2
        let v = 5;
        let blocks = (0..v).map(|i| (0..v).filter(|&p| p != i).collect()).collect();
        let d = IncidenceStructure::new(v, blocks).unwrap();
        let p = verify_symmetric(&d).unwrap();
        assert_eq!((p.k, p.lambda, p.nontrivial), (4, 3, false));
    }

    #[test]
    fn params_identity() {
        assert!(DesignParams::new(11, 5, 2).is_some());
        assert!(DesignParams::new(10, 5, 2).is_none());
        assert_eq!(DesignParams::new(45, 12, 3).unwrap().complement().unwrap().lambda, 24);
    }
}
