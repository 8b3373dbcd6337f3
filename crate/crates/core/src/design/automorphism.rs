use std::collections::{HashSet, VecDeque};

use crate::perm::{Permutation, PermutationGroup};

use super::{DesignError, IncidenceStructure};

/// An incident (point, block) pair, by block index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub point: usize,
    pub block: usize,
}

fn image_block(g: &Permutation, block: &[usize]) -> Vec<usize> {
    let mut img: Vec<usize> = block.iter().map(|&p| g.apply(p)).collect();
    img.sort_unstable();
    img
}

/// Permutation induced by `g` on block indices, if `g` is an automorphism.
pub fn block_action(d: &IncidenceStructure, g: &Permutation) -> Result<Option<Vec<usize>>, DesignError> {
    if g.degree() != d.v() {
        return Err(DesignError::DegreeMismatch {
            expected: d.v(),
            found: g.degree(),
        });
    }
    let mut action = Vec::with_capacity(d.num_blocks());
    for b in d.blocks() {
        match d.block_index(&image_block(g, b)) {
            Some(i) => action.push(i),
            None => return Ok(None),
        }
    }
    Ok(Some(action))
}

pub fn is_automorphism(d: &IncidenceStructure, g: &Permutation) -> Result<bool, DesignError> {
    Ok(block_action(d, g)?.is_some())
}

fn generator_actions(g: &PermutationGroup, d: &IncidenceStructure) -> Result<Vec<Vec<usize>>, DesignError> {
    g.generators()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            block_action(d, s)?.ok_or_else(|| DesignError::NotAutomorphism {
                index: i + 1,
                generator: s.to_string(),
            })
        })
        .collect()
}

/// Whether `g` acts transitively on the flags of `d`, by walking the orbit
/// of the first flag.
pub fn is_flag_transitive(g: &PermutationGroup, d: &IncidenceStructure) -> Result<bool, DesignError> {
    let actions = generator_actions(g, d)?;
    if d.num_blocks() == 0 {
        return Ok(false);
    }
    let start = Flag {
        point: d.block(0)[0],
        block: 0,
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for (s, act) in g.generators().iter().zip(&actions) {
            let img = Flag {
                point: s.apply(f.point),
                block: act[f.block],
            };
            if seen.insert(img) {
                queue.push_back(img);
            }
        }
    }
    let verdict = seen.len() == d.num_flags();
    debug_assert_eq!(verdict, two_step_flag_transitive(g, d));
    Ok(verdict)
}

/// Point-transitive, and the stabilizer of a point is transitive on the
/// blocks through it.
fn two_step_flag_transitive(g: &PermutationGroup, d: &IncidenceStructure) -> bool {
    if !g.is_transitive() || d.blocks_through(0).is_empty() {
        return false;
    }
    // every point must lie on a block for the flag count to match
    if (0..d.v()).any(|p| d.replication(p) == 0) {
        return false;
    }
    let stab = g.point_stabilizer(0).expect("point in range");
    let stab_actions = generator_actions(&stab, d).expect("subgroup of automorphisms");
    let through = d.blocks_through(0);
    let mut seen = vec![false; d.num_blocks()];
    seen[through[0]] = true;
    let mut queue = vec![through[0]];
    let mut count = 1;
    while let Some(b) = queue.pop() {
        for act in &stab_actions {
            let c = act[b];
            if !seen[c] {
                seen[c] = true;
                count += 1;
                queue.push(c);
            }
        }
    }
    count == through.len()
}

/// Blocks are the distinct images of `base_block` under `g`.
pub fn orbit_design(g: &PermutationGroup, base_block: &[usize]) -> Result<IncidenceStructure, DesignError> {
    let v = g.degree();
    if base_block.is_empty() {
        return Err(DesignError::EmptyBlock);
    }
    if let Some(&p) = base_block.iter().find(|&&p| p >= v) {
        return Err(DesignError::PointOutOfRange { point: p + 1, v });
    }
    let mut start = base_block.to_vec();
    start.sort_unstable();
    start.dedup();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for s in g.generators() {
            let img = image_block(s, &b);
            if !seen.contains(&img) {
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    IncidenceStructure::new(v, seen.into_iter().collect())
}
