use num_bigint::BigUint;
use proptest::prelude::*;
use symdesign::elimination::{admissible, corollary_families};
use symdesign::oracle;
use symdesign::perm::{Permutation, PermutationGroup};

fn perm(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_cancels(images in (2usize..20).prop_flat_map(perm)) {
        let p = Permutation::from_images(images).unwrap();
        prop_assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn cycle_text_round_trips(images in (2usize..20).prop_flat_map(perm)) {
        let p = Permutation::from_images(images).unwrap();
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn chain_order_matches_closure(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let (g, order) = oracle::random_small_group(&mut rng, 7, 5040);
        prop_assert_eq!(g.order(), BigUint::from(order));
        for p in g.generators() {
            prop_assert!(g.contains(p).unwrap());
        }
    }

    #[test]
    fn minimal_blocks_match_exhaustive_search(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let (g, _) = oracle::random_small_group(&mut rng, 10, 20_000);
        let gens = oracle::generator_images(&g);
        if g.is_transitive() && g.degree() > 1 {
            for b in 1..g.degree() {
                prop_assert_eq!(
                    g.minimal_block(0, b).unwrap(),
                    oracle::exhaustive_minimal_block(g.degree(), &gens, 0, b)
                );
            }
        }
    }

    #[test]
    fn admissible_matches_scan(v in 5u64..400, bound in 1u64..5000) {
        let v2 = v | 1;
        let fast = admissible(&BigUint::from(v2), &BigUint::from(bound), None, None, 1).unwrap();
        let fast: Vec<(u128, u128)> = fast
            .iter()
            .map(|p| (u128::try_from(&p.k).unwrap(), u128::try_from(&p.lambda).unwrap()))
            .collect();
        prop_assert_eq!(fast, oracle::brute_admissible(v2 as u128, bound as u128, None));
    }

    #[test]
    fn orbit_partition_covers_points(seed in any::<u64>()) {
        let mut rng = oracle::rng(seed);
        let (g, _) = oracle::random_small_group(&mut rng, 12, 50_000);
        let mut pts: Vec<usize> = g.orbits().concat();
        pts.sort();
        prop_assert_eq!(pts, (0..g.degree()).collect::<Vec<_>>());
    }
}

#[test]
fn corollary_rejects_non_primes() {
    for n in [0u64, 1, 4, 15, 91] {
        assert!(corollary_families(n).is_err());
    }
}

#[test]
fn trivial_group_has_order_one() {
    assert_eq!(PermutationGroup::trivial(5).order(), BigUint::from(1u32));
}
