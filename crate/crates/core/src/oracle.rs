//! Slow, independent reference implementations used to cross-check the fast
//! algorithms. Nothing here shares code with the modules it checks.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::{Permutation, PermutationGroup};

/// Enumerates the group generated by `gens` by breadth-first closure.
/// Returns `None` once more than `limit` elements have been found.
pub fn closure_order(degree: usize, gens: &[Vec<u32>], limit: usize) -> Option<usize> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// `(v, k, λ)` if the blocks form a symmetric design, by counting for every
/// point pair the blocks containing both.
pub fn brute_symmetric(v: usize, blocks: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
    if v < 2 || blocks.len() != v {
        return None;
    }
    let k = blocks[0].len();
    if blocks.iter().any(|b| b.len() != k) {
        return None;
    }
    let mut lambda = None;
    for a in 0..v {
        for b in a + 1..v {
            let c = blocks.iter().filter(|bl| bl.contains(&a) && bl.contains(&b)).count();
            match lambda {
                None => lambda = Some(c),
                Some(l) if l != c => return None,
                _ => {}
            }
        }
    }
    lambda.map(|l| (v, k, l))
}

/// Whether the subset `mask` is a block of imprimitivity: its images under
/// the group are pairwise equal or disjoint. Degree at most 64.
pub fn is_block(degree: usize, gens: &[Vec<u32>], mask: u64) -> bool {
    let image = |g: &Vec<u32>, m: u64| {
        (0..degree)
            .filter(|&i| m >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | 1 << g[i])
    };
    let mut orbit = vec![mask];
    let mut seen = HashSet::from([mask]);
    let mut i = 0;
    while i < orbit.len() {
        for g in gens {
            let y = image(g, orbit[i]);
            if seen.insert(y) {
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit.iter().all(|&a| orbit.iter().all(|&b| a == b || a & b == 0))
}

/// Smallest block containing `a` and `b`, by trying every subset.
pub fn exhaustive_minimal_block(degree: usize, gens: &[Vec<u32>], a: usize, b: usize) -> Vec<usize> {
    assert!(degree <= 16 && a != b);
    let need = 1u64 << a | 1u64 << b;
    let mut best: Option<u64> = None;
    for mask in 0u64..1 << degree {
        if mask & need != need {
            continue;
        }
        if best.is_some_and(|m| m.count_ones() <= mask.count_ones()) {
            continue;
        }
        if is_block(degree, gens, mask) {
            best = Some(mask);
        }
    }
    let m = best.expect("the full set is a block");
    (0..degree).filter(|&i| m >> i & 1 == 1).collect()
}

fn is_prime_trial(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Every `k` in `[3, v-2]` dividing `k_bound` with `k(k-1)/(v-1)` a prime
/// `λ` and `λv < k²`, by a straight scan. Meant for `k_bound <= 10^7`.
pub fn brute_admissible(v: u128, k_bound: u128, required_lambda: Option<u128>) -> Vec<(u128, u128)> {
    let mut out = Vec::new();
    if v < 4 {
        return out;
    }
    let top = (v - 2).min(k_bound);
    for k in 3..=top {
        if k_bound % k != 0 || (k * (k - 1)) % (v - 1) != 0 {
            continue;
        }
        let lambda = k * (k - 1) / (v - 1);
        if required_lambda.is_some_and(|l| l != lambda) {
            continue;
        }
        if lambda * v < k * k && is_prime_trial(lambda) {
            out.push((k, lambda));
        }
    }
    out
}

/// A permutation group on at most `max_degree` points with a handful of
/// random generators, resampled until its order is at most `max_order`.
pub fn random_small_group(rng: &mut ChaCha8Rng, max_degree: usize, max_order: usize) -> (PermutationGroup, usize) {
    loop {
        let degree = rng.gen_range(2..=max_degree);
        let ngens = rng.gen_range(1..=3);
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for _ in 0..ngens {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            // mostly short cycles so the groups stay small
            if rng.gen_bool(0.5) {
                images.shuffle(rng);
            } else {
                let len = rng.gen_range(2..=degree.min(4));
                let mut pts: Vec<u32> = (0..degree as u32).collect();
                pts.shuffle(rng);
                for i in 0..len {
                    images[pts[i] as usize] = pts[(i + 1) % len];
                }
            }
            gens.push(images);
        }
        if let Some(order) = closure_order(degree, &gens, max_order) {
            let perms = gens
                .into_iter()
                .map(|g| Permutation::from_images(g).expect("valid images"))
                .collect();
            let g = PermutationGroup::new(degree, perms).expect("same degree");
            return (g, order);
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Images of every generator, as plain vectors.
pub fn generator_images(g: &PermutationGroup) -> Vec<Vec<u32>> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_s3() {
        assert_eq!(closure_order(3, &[vec![1, 0, 2], vec![1, 2, 0]], 100), Some(6));
        assert_eq!(closure_order(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 100), None);
    }

    #[test]
    fn blocks_of_a_4_cycle() {
        let gens = vec![vec![1, 2, 3, 0]];
        assert_eq!(exhaustive_minimal_block(4, &gens, 0, 2), vec![0, 2]);
        assert_eq!(exhaustive_minimal_block(4, &gens, 0, 1), vec![0, 1, 2, 3]);
    }

    #[test]
    fn brute_pairs() {
        let fano: Vec<Vec<usize>> = (0..7).map(|i| [0, 1, 3].iter().map(|d| (d + i) % 7).collect()).collect();
        assert_eq!(brute_symmetric(7, &fano), Some((7, 3, 1)));
        assert_eq!(brute_symmetric(7, &fano[..6]), None);
    }

    #[test]
    fn brute_scan() {
        assert_eq!(brute_admissible(11, 60, None), vec![(5, 2), (6, 3)]);
        assert_eq!(brute_admissible(7, 24, None), vec![(4, 2)]);
        assert!(brute_admissible(28431, 645120, None).is_empty());
    }

    #[test]
    fn random_groups_are_small() {
        let mut r = rng(7);
        for _ in 0..5 {
            let (g, order) = random_small_group(&mut r, 8, 10_000);
            assert!(order <= 10_000);
            assert_eq!(g.order(), order.into());
        }
    }
}
