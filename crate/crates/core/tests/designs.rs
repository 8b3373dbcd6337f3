use symdesign::algebra::PrimePower;
use symdesign::constructions::{catalog, projective_params, projective_space, CATALOG_NAMES};
use symdesign::design::{complement, verify_symmetric, IncidenceStructure};

#[test]
fn every_catalog_instance_agrees_with_its_entry() {
    for name in CATALOG_NAMES {
        let inst = catalog(name).unwrap();
        let check = inst.check().unwrap();
        assert!(inst.agrees_with(&check), "{name}");
    }
}

#[test]
fn unknown_catalog_name() {
    assert!(catalog("no_such_design").is_err());
}

#[test]
fn text_round_trip_and_complement() {
    let d = catalog("paley_11_5_2").unwrap().design;
    let back = IncidenceStructure::parse(&d.to_text()).unwrap();
    assert_eq!(verify_symmetric(&back).unwrap(), verify_symmetric(&d).unwrap());
    let c = complement(&d).unwrap();
    let p = verify_symmetric(&c).unwrap();
    assert_eq!((p.v, p.k, p.lambda), (11, 6, 3));
}

#[test]
fn non_designs_are_rejected() {
    let d = IncidenceStructure::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 2]]).unwrap();
    assert!(verify_symmetric(&d).is_err());
    let d = IncidenceStructure::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    assert!(verify_symmetric(&d).is_err());
}

#[test]
fn projective_spaces_match_formula() {
    for (n, q) in [(3usize, 2u64), (3, 3), (3, 4), (4, 2), (4, 3), (5, 2), (3, 7), (3, 8), (3, 9)] {
        let pp = PrimePower::from_order(q).unwrap();
        let s = projective_space(n, &pp).unwrap();
        let p = verify_symmetric(&s.design).unwrap();
        let (v, k, l) = projective_params(n as u32, q);
        assert_eq!((p.v as u64, p.k as u64, p.lambda as u64), (v, k, l), "PG({},{q})", n - 1);
    }
    assert!(projective_space(2, &PrimePower::from_order(2u64).unwrap()).is_err());
}
