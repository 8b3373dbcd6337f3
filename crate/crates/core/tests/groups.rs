use num_bigint::BigUint;
use symdesign::acceptance::SIGMA_TEXT;
use symdesign::constructions::data::vendored_group;
use symdesign::perm::{Permutation, PermutationGroup};

fn sigma() -> PermutationGroup {
    PermutationGroup::parse_generators(&SIGMA_TEXT, 45).unwrap()
}

#[test]
fn printed_generators_match_vendored_file() {
    let printed = sigma();
    let shipped = vendored_group("sigma45").unwrap();
    assert_eq!(printed.generators(), shipped.generators());
}

#[test]
fn sigma_group_order_and_stabiliser() {
    let g = sigma();
    assert_eq!(g.order(), BigUint::from(3240u32));
    assert!(g.is_transitive());
    assert_eq!(g.point_stabilizer(0).unwrap().order(), BigUint::from(72u32));
}

#[test]
fn sigma_block_system() {
    let g = sigma();
    let sys = g.imprimitivity_witness().unwrap().expect("imprimitive");
    assert_eq!((sys.class_size(), sys.num_classes()), (9, 5));
    for p in g.generators() {
        assert!(sys.is_invariant_under(p));
    }
    assert_eq!(g.minimal_block(0, 5).unwrap(), vec![0, 5, 10, 16, 19, 22, 25, 28, 31]);
}

#[test]
fn subdegrees_of_shipped_groups() {
    let cases = [("psl2_7", vec![1, 6]), ("psl2_11", vec![1, 10]), ("psu4_2_45", vec![1, 12, 32])];
    for (name, want) in cases {
        let g = vendored_group(name).unwrap();
        let mut got = g.subdegrees(0).unwrap();
        got.sort();
        assert_eq!(got, want, "{name}");
        assert!(g.is_primitive().unwrap(), "{name}");
    }
}

#[test]
fn shipped_group_orders() {
    let cases = [("psl2_7", 168u32), ("psl2_11", 660), ("psu4_2_45", 25920)];
    for (name, order) in cases {
        assert_eq!(vendored_group(name).unwrap().order(), BigUint::from(order), "{name}");
    }
}

#[test]
fn symmetric_and_alternating_orders() {
    let s8 = PermutationGroup::parse_generators(&["(1,2)", "(1,2,3,4,5,6,7,8)"], 8).unwrap();
    assert_eq!(s8.order(), BigUint::from(40320u32));
    let a7 = PermutationGroup::parse_generators(&["(1,2,3)", "(3,4,5,6,7)"], 7).unwrap();
    assert_eq!(a7.order(), BigUint::from(2520u32));
    let odd = Permutation::parse_cycles("(1,2)", 7).unwrap();
    assert!(!a7.contains(&odd).unwrap());
}

#[test]
fn group_file_round_trip() {
    let g = sigma();
    let back = PermutationGroup::from_group_file(&g.to_group_file()).unwrap();
    assert_eq!(back.generators(), g.generators());
}

#[test]
fn malformed_cycles_are_rejected() {
    assert!(Permutation::parse_cycles("(1,2,2)", 4).is_err());
    assert!(Permutation::parse_cycles("(1,5)", 4).is_err());
    assert!(Permutation::parse_cycles("(1,2", 4).is_err());
    assert!(Permutation::parse_cycles("(0,1)", 4).is_err());
}
