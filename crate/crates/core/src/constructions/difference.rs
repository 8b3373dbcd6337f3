use crate::design::{verify_symmetric, DesignParams, IncidenceStructure};

use super::{AmbientGroup, ConstructionError};

/// Largest ambient group searched exhaustively by [`find_difference_set`].
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceSetSpec {
    pub ambient: AmbientGroup,
    /// Element indices in the ambient group's enumeration.
    pub base_set: Vec<usize>,
}

impl DifferenceSetSpec {
    pub fn new(ambient: AmbientGroup, mut base_set: Vec<usize>) -> Result<Self, ConstructionError> {
        base_set.sort_unstable();
        base_set.dedup();
        if let Some(&x) = base_set.iter().find(|&&x| x >= ambient.order()) {
            return Err(ConstructionError::InvalidAmbient(format!(
                "element index {x} outside a group of order {}",
                ambient.order()
            )));
        }
        Ok(Self { ambient, base_set })
    }

    /// Multiplicity of each element as `d1 * d2^-1` with `d1 != d2` in the base set.
    pub fn difference_counts(&self) -> Vec<usize> {
        let g = &self.ambient;
        let mut counts = vec![0; g.order()];
        for &a in &self.base_set {
            for &b in &self.base_set {
                if a != b {
                    counts[g.mul(a, g.inv(b))] += 1;
                }
            }
        }
        counts
    }

    /// The common multiplicity λ, or the first element that breaks it.
    pub fn lambda(&self) -> Result<usize, ConstructionError> {
        let counts = self.difference_counts();
        if counts.len() < 2 {
            return Err(ConstructionError::InvalidAmbient("trivial ambient group".into()));
        }
        let expected = counts[1];
        match (1..counts.len()).find(|&x| counts[x] != expected) {
            None => Ok(expected),
            Some(x) => Err(ConstructionError::NotDifferenceSet {
                element: self.ambient.element_name(x).to_string(),
                count: counts[x],
                expected,
            }),
        }
    }
}

/// Develops `D` into the design whose blocks are the right translates `D g`.
pub fn develop_difference_set(
    spec: &DifferenceSetSpec,
) -> Result<(IncidenceStructure, DesignParams), ConstructionError> {
    spec.lambda()?;
    let g = &spec.ambient;
    let blocks = (0..g.order())
        .map(|t| spec.base_set.iter().map(|&d| g.mul(d, t)).collect())
        .collect();
    let design = IncidenceStructure::new(g.order(), blocks)?;
    let params = verify_symmetric(&design)?;
    Ok((design, params))
}

/// Lexicographically first `k`-subset containing the identity that is a
/// `(|G|, k, λ)` difference set, by backtracking.
pub fn find_difference_set(
    ambient: &AmbientGroup,
    k: usize,
    lambda: usize,
) -> Result<Option<DifferenceSetSpec>, ConstructionError> {
    let n = ambient.order();
    if n > MAX_SEARCH_ORDER {
        return Err(ConstructionError::SearchTooLarge { order: n });
    }
    if k == 0 || k > n || k * (k - 1) != lambda * (n - 1) {
        return Ok(None);
    }
    let mut chosen = vec![ambient.identity()];
    let mut counts = vec![0usize; n];
    if search(ambient, k, lambda, 1, &mut chosen, &mut counts) {
        return Ok(Some(DifferenceSetSpec::new(ambient.clone(), chosen)?));
    }
    Ok(None)
}

fn search(
    g: &AmbientGroup,
    k: usize,
    lambda: usize,
    next: usize,
    chosen: &mut Vec<usize>,
    counts: &mut [usize],
) -> bool {
    if chosen.len() == k {
        return true;
    }
    let n = g.order();
    for x in next..n {
        if n - x < k - chosen.len() {
            break;
        }
        let mut added = Vec::with_capacity(2 * chosen.len());
        let mut ok = true;
        for &c in chosen.iter() {
            for d in [g.mul(x, g.inv(c)), g.mul(c, g.inv(x))] {
                counts[d] += 1;
                added.push(d);
                if counts[d] > lambda {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            chosen.push(x);
            if search(g, k, lambda, x + 1, chosen, counts) {
                return true;
            }
            chosen.pop();
        }
        for d in added {
            counts[d] -= 1;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_7_quadratic_residues() {
        let spec = DifferenceSetSpec::new(AmbientGroup::cyclic(7).unwrap(), vec![1, 2, 4]).unwrap();
        let (_, p) = develop_difference_set(&spec).unwrap();
        assert_eq!((p.v, p.k, p.lambda), (7, 3, 1));
    }

    #[test]
    fn paley_11() {
        let spec = DifferenceSetSpec::new(AmbientGroup::cyclic(11).unwrap(), vec![1, 3, 4, 5, 9]).unwrap();
        let (_, p) = develop_difference_set(&spec).unwrap();
        assert_eq!((p.v, p.k, p.lambda), (11, 5, 2));
    }

    #[test]
    fn one_two_three_five_zero_mod_11_is_not_a_difference_set() {
        let spec = DifferenceSetSpec::new(AmbientGroup::cyclic(11).unwrap(), vec![1, 2, 3, 5, 0]).unwrap();
        assert_eq!(
            spec.lambda(),
            Err(ConstructionError::NotDifferenceSet {
                element: "3".into(),
                count: 2,
                expected: 3,
            })
        );
        let counts = spec.difference_counts();
        assert_eq!(&counts[1..], &[3, 3, 2, 1, 1, 1, 1, 2, 3, 3]);
        assert!(matches!(
            develop_difference_set(&spec),
            Err(ConstructionError::NotDifferenceSet { .. })
        ));
    }

    #[test]
    fn search_cyclic_11() {
        let spec = find_difference_set(&AmbientGroup::cyclic(11).unwrap(), 5, 2).unwrap().unwrap();
        assert_eq!(spec.base_set, vec![0, 1, 2, 4, 7]);
        let (_, p) = develop_difference_set(&spec).unwrap();
        assert_eq!((p.v, p.k, p.lambda), (11, 5, 2));
    }

    #[test]
    fn search_fails_when_arithmetic_fails() {
        assert_eq!(find_difference_set(&AmbientGroup::cyclic(10).unwrap(), 5, 2).unwrap(), None);
    }

    #[test]
    fn sixteen_point_biplanes() {
        for g in [
            AmbientGroup::elementary_abelian(2, 4).unwrap(),
            AmbientGroup::product(&[2, 8]).unwrap(),
            AmbientGroup::q8_times_z2(),
        ] {
            let spec = find_difference_set(&g, 6, 2).unwrap().unwrap_or_else(|| panic!("{g}"));
            let (_, p) = develop_difference_set(&spec).unwrap();
            assert_eq!((p.v, p.k, p.lambda), (16, 6, 2));
        }
    }

    #[test]
    fn cyclic_16_has_no_biplane_difference_set() {
        assert_eq!(find_difference_set(&AmbientGroup::cyclic(16).unwrap(), 6, 2).unwrap(), None);
    }
}
