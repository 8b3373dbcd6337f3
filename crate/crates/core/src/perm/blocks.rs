use super::Permutation;

/// A partition of the points into classes of equal size.
///
/// Class ids are assigned in order of each class's smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    class_of: Vec<usize>,
    num_classes: usize,
    class_size: usize,
}

impl BlockSystem {
    /// Builds a system from arbitrary per-point labels. Classes need not be
    /// equal-sized here; `is_uniform` reports that.
    pub fn from_labels<T: PartialEq + Copy>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        let num_classes = seen.len();
        let class_size = if num_classes == 0 { 0 } else { labels.len() / num_classes };
        Self {
            class_of,
            num_classes,
            class_size,
        }
    }

    pub fn degree(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, point: usize) -> usize {
        self.class_of[point]
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (p, &c) in self.class_of.iter().enumerate() {
            out[c].push(p);
        }
        out
    }

    pub fn class_containing(&self, point: usize) -> Vec<usize> {
        let c = self.class_of[point];
        (0..self.degree()).filter(|&p| self.class_of[p] == c).collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.classes().iter().all(|c| c.len() == self.class_size)
            && self.class_size * self.num_classes == self.degree()
    }

    pub fn is_trivial(&self) -> bool {
        self.num_classes <= 1 || self.class_size <= 1
    }

    /// Whether `g` maps every class onto a class.
    pub fn is_invariant_under(&self, g: &Permutation) -> bool {
        let mut image_class = vec![usize::MAX; self.num_classes];
        for p in 0..self.degree() {
            let c = self.class_of[p];
            let d = self.class_of[g.apply(p)];
            if image_class[c] == usize::MAX {
                image_class[c] = d;
            } else if image_class[c] != d {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_to_classes() {
        let s = BlockSystem::from_labels(&[7, 3, 7, 3]);
        assert_eq!(s.classes(), vec![vec![0, 2], vec![1, 3]]);
        assert!(s.is_uniform());
        let swap = Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap();
        assert!(s.is_invariant_under(&swap));
        let bad = Permutation::parse_cycles("(1,2)", 4).unwrap();
        assert!(!s.is_invariant_under(&bad));
    }
}
