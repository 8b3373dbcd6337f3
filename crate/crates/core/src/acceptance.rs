//! The acceptance suite: one check per criterion, each reporting PASS or
//! FAIL with a short detail line and its wall time.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::algebra::PrimePower;
use crate::constructions::{
    catalog, develop_difference_set, find_difference_set, projective_params, projective_space, AmbientGroup,
    DifferenceSetSpec, CATALOG_NAMES, IMPRIMITIVE_BASE_BLOCK, IMPRIMITIVE_BLOCK,
};
use crate::design::{complement, is_flag_transitive, orbit_design, verify_symmetric, IncidenceStructure};
use crate::elimination::{
    admissible, check_bounds, check_division_identity, corollary_families, load_catalog, order_bound_cases,
    run_catalog, subdegree_condition, Bound, FamilyCase, RowStatus, BOUND_FIELD_ORDERS,
};
use crate::oracle;
use crate::perm::PermutationGroup;

/// The five generators of the point-imprimitive (45,12,3) example, with the
/// spacing and line breaks of their printed form.
pub const SIGMA_TEXT: [&str; 5] = [
    "(1,2,4,5,3)( 6,16,43,13,14)( 7,39,33,45,26)( 8,21,37,32,28)( 9,11,25,35,10)
 	( 12,44,24,40,17) (15,30,38,23,19) ( 18,34,20,31,41) ( 22,36,27,42,29)",
    "(1,5,2,3,4)( 6,10,16,9,43,11,13,25,14,35)( 7,40,39,17,33,12,45,44,26,24) ( 8,23,21,19,37,15,32,30,28,38)( 18,22,34,36,20,27,31,42,41,29)",
    "(2,5,3,4)( 6,17,32,20,11,26,23,29)( 7,30,42,43,12,21,34,35)( 8,31,10,45,15,22,13,
	40) ( 9,39,19,27,14,44,28,18)( 16,24,37,41,25,33,38,36)",
    "(2,3) ( 4,5) ( 6,32,11,23) ( 7,42,12,34) ( 8,10,15,13) ( 9,19,14,28)( 16,37,
	25,38) ( 17,20,26,29)( 18,39,27,44) ( 21,35,30,43) ( 22,40,31,45) ( 24,41,33,36)",
    "(1,6,11) ( 3,40,45) ( 4,41,36) ( 5,13,10) ( 8,35,
	39) ( 9,42,38) ( 14,37,34) ( 15,44,43)( 17,32,29)
	( 18,30,33) ( 20,23,26) ( 21,27,24)",
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {}: {} [{:.2}s] {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.number,
            self.title,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

fn timed(number: u8, title: &'static str, body: impl FnOnce() -> Result<String, String>) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        number,
        title,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The small flag-transitive designs verify and their groups are flag-transitive.
pub fn criterion_1() -> CriterionResult {
    timed(1, "small flag-transitive designs", || {
        let names = [
            "fano_complement",
            "paley_11_5_2",
            "paley_complement_11_6_3",
            "unitary_45_12_3",
            "imprimitive_45_12_3",
        ];
        let mut seen = Vec::new();
        for name in names {
            let inst = catalog(name).map_err(|e| format!("{name}: {e}"))?;
            let check = inst.check().map_err(|e| format!("{name}: {e}"))?;
            ensure(check.params == inst.expected, || format!("{name}: got {}", check.params))?;
            ensure(check.flag_transitive == Some(true), || format!("{name}: not flag-transitive"))?;
            seen.push(format!("{}", check.params));
        }
        Ok(seen.join(" "))
    })
}

/// The imprimitive (45,12,3) example end to end from the printed generators.
pub fn criterion_2() -> CriterionResult {
    timed(2, "imprimitive (45,12,3) example", || {
        let g = PermutationGroup::parse_generators(&SIGMA_TEXT, 45).map_err(|e| e.to_string())?;
        ensure(g.order() == BigUint::from(3240u32), || format!("order {}", g.order()))?;
        let base: Vec<usize> = IMPRIMITIVE_BASE_BLOCK.iter().map(|p| p - 1).collect();
        let d = orbit_design(&g, &base).map_err(|e| e.to_string())?;
        ensure(d.num_blocks() == 45, || format!("{} blocks", d.num_blocks()))?;
        let p = verify_symmetric(&d).map_err(|e| e.to_string())?;
        ensure((p.v, p.k, p.lambda) == (45, 12, 3), || format!("params {p}"))?;
        ensure(is_flag_transitive(&g, &d).map_err(|e| e.to_string())?, || "not flag-transitive".into())?;
        ensure(!g.is_primitive().map_err(|e| e.to_string())?, || "primitive".into())?;
        let want: Vec<usize> = IMPRIMITIVE_BLOCK.iter().map(|p| p - 1).collect();
        let block = g.minimal_block(0, 5).map_err(|e| e.to_string())?;
        ensure(block == want, || format!("minimal block {block:?}"))?;
        let w = g.imprimitivity_witness().map_err(|e| e.to_string())?.ok_or("no witness")?;
        ensure(w.class_containing(0) == want, || format!("witness class {:?}", w.class_containing(0)))?;
        Ok(format!(
            "|G|=3240, (45,12,3), block {{1,6,11,17,20,23,26,29,32}}, stabiliser {}",
            g.point_stabilizer(0).map_err(|e| e.to_string())?.order()
        ))
    })
}

/// Projective spaces match the closed-form parameters; λ primality flagged.
pub fn criterion_3() -> CriterionResult {
    timed(3, "projective spaces", || {
        let mut seen = Vec::new();
        for (n, q) in [(3u32, 2u64), (3, 3), (4, 2), (4, 3), (5, 2)] {
            let pp = PrimePower::from_order(q).map_err(|e| e.to_string())?;
            let s = projective_space(n as usize, &pp).map_err(|e| e.to_string())?;
            let (v, k, l) = projective_params(n, q);
            let got = (s.params.v as u64, s.params.k as u64, s.params.lambda as u64);
            ensure(got == (v, k, l), || format!("PG({},{q}): {got:?} vs {:?}", n - 1, (v, k, l)))?;
            let expect_prime = matches!((n, q), (4, 2) | (5, 2));
            ensure(s.lambda_primality.is_prime() == expect_prime, || {
                format!("PG({},{q}): λ={l} primality {:?}", n - 1, s.lambda_primality)
            })?;
            seen.push(format!("{}", s.params));
        }
        Ok(seen.join(" "))
    })
}

/// Every catalog row gives its expected outcome.
pub fn criterion_4(jobs: usize, seed: u64) -> CriterionResult {
    timed(4, "elimination catalog", || {
        let rows = load_catalog().map_err(|e| e.to_string())?;
        let reports = run_catalog(&rows, jobs, seed, |_| {}).map_err(|e| e.to_string())?;
        let bad: Vec<String> = reports
            .iter()
            .filter(|r| r.status != RowStatus::Pass)
            .map(|r| r.machine_line())
            .collect();
        ensure(bad.is_empty(), || bad.join(" | "))?;
        let slowest = reports
            .iter()
            .max_by_key(|r| r.elapsed)
            .map(|r| format!("{} {:.2}s", r.row.id, r.elapsed.as_secs_f64()))
            .unwrap_or_default();
        let external = reports.iter().find(|r| r.row.id == "P4.2").map(|r| r.machine_line()).unwrap_or_default();
        Ok(format!(
            "{} rows PASS; slowest {slowest}; {}",
            reports.len(),
            external
        ))
    })
}

/// The imprimitive parameter families satisfy the design identity for all primes ≤ 1000.
pub fn criterion_5() -> CriterionResult {
    timed(5, "imprimitive parameter families", || {
        let primes = crate::algebra::sieve(1000);
        let mut tuples = 0;
        for &p in &primes {
            let fam = corollary_families(p).map_err(|e| e.to_string())?;
            for t in &fam {
                ensure(t.identity_holds(), || format!("λ={p}: {t}"))?;
            }
            let has_c = fam.iter().any(|t| t.case == FamilyCase::C);
            ensure(has_c == matches!(p % 6, 1 | 3), || format!("λ={p}: case (c) emitted={has_c}"))?;
            tuples += fam.len();
        }
        Ok(format!("{} primes, {tuples} tuples", primes.len()))
    })
}

/// Order, factorial and product bounds plus the polynomial division identities.
pub fn criterion_6() -> CriterionResult {
    timed(6, "bound lemmas and division identities", || {
        let mut cases: Vec<Bound> = order_bound_cases();
        cases.extend((5..=30).map(|t| Bound::FactorialFive { t }));
        cases.extend((4..=30).map(|t| Bound::FactorialTwo { t }));
        for n in 3..=12 {
            for q in BOUND_FIELD_ORDERS {
                cases.push(Bound::Product { n, q });
            }
        }
        let mut failures = Vec::new();
        for b in &cases {
            match check_bounds(b) {
                Ok(true) => {}
                Ok(false) => failures.push(b.to_string()),
                Err(e) => failures.push(format!("{b}: {e}")),
            }
        }
        let mut identities = 0;
        for n in 7..=40u32 {
            for t in 3..=6u32 {
                if n < t + 2 {
                    continue;
                }
                identities += 1;
                match check_division_identity(n, t) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!("division n={n} t={t}")),
                    Err(e) => failures.push(format!("division n={n} t={t}: {e}")),
                }
            }
        }
        let summary = format!("{} bound cases, {identities} identities", cases.len());
        if failures.is_empty() {
            Ok(summary)
        } else {
            let (division, bounds): (Vec<_>, Vec<_>) = failures.iter().partition(|f| f.starts_with("division"));
            let ts: std::collections::BTreeSet<_> =
                division.iter().filter_map(|f| f.split("t=").nth(1)).collect();
            Err(format!(
                "{summary}; {} bound failures [{}]; {} division failures (t in {:?}), first {}",
                bounds.len(),
                bounds.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", "),
                division.len(),
                ts,
                division.first().map(|s| s.as_str()).unwrap_or("-")
            ))
        }
    })
}

fn oracle_designs() -> Result<Vec<(String, IncidenceStructure)>, String> {
    let mut out = Vec::new();
    for name in CATALOG_NAMES {
        let inst = catalog(name).map_err(|e| e.to_string())?;
        out.push((name.to_string(), inst.design));
    }
    for (n, q) in [(3usize, 2u64), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3), (5, 2)] {
        let pp = PrimePower::from_order(q).map_err(|e| e.to_string())?;
        let s = projective_space(n, &pp).map_err(|e| e.to_string())?;
        out.push((format!("PG({},{q})", n - 1), s.design));
    }
    for (order, k, l) in [(7usize, 3usize, 1usize), (11, 5, 2), (13, 4, 1), (21, 5, 1), (31, 6, 1), (37, 9, 2), (40, 13, 4)] {
        let g = AmbientGroup::cyclic(order).map_err(|e| e.to_string())?;
        if let Some(spec) = find_difference_set(&g, k, l).map_err(|e| e.to_string())? {
            let (d, _) = develop_difference_set(&spec).map_err(|e| e.to_string())?;
            out.push((format!("Z{order} ({order},{k},{l})"), d));
        }
    }
    let with_complements: Vec<_> = out
        .iter()
        .filter_map(|(n, d)| complement(d).ok().map(|c| (format!("{n} complement"), c)))
        .collect();
    out.extend(with_complements);
    // non-designs: one point moved in one block, and a non-difference set developed
    let near_misses: Vec<_> = out
        .iter()
        .filter_map(|(n, d)| {
            let mut blocks = d.blocks().to_vec();
            let b = &mut blocks[0];
            let out_pt = (0..d.v()).find(|p| !b.contains(p))?;
            b[0] = out_pt;
            IncidenceStructure::new(d.v(), blocks).ok().map(|s| (format!("{n} perturbed"), s))
        })
        .collect();
    out.extend(near_misses);
    let shift = DifferenceSetSpec::new(AmbientGroup::cyclic(11).map_err(|e| e.to_string())?, vec![0, 1, 2, 3, 5])
        .map_err(|e| e.to_string())?;
    let g = &shift.ambient;
    let blocks = (0..11).map(|t| shift.base_set.iter().map(|&d| g.mul(d, t)).collect()).collect();
    out.push(("Z11 {0,1,2,3,5}".into(), IncidenceStructure::new(11, blocks).map_err(|e| e.to_string())?));
    Ok(out.into_iter().filter(|(_, d)| d.v() <= 50).collect())
}

fn transitive_test_groups() -> Result<Vec<PermutationGroup>, String> {
    let mut out = Vec::new();
    let parse = |lines: &[&str], n: usize| PermutationGroup::parse_generators(lines, n).map_err(|e| e.to_string());
    out.push(parse(&["(1,2,3,4)"], 4)?);
    out.push(parse(&["(1,2,3,4,5,6)", "(2,6)(3,5)"], 6)?);
    out.push(parse(&["(1,2,3,4,5,6,7,8,9,10,11,12)"], 12)?);
    out.push(parse(&["(1,2,3)(4,5,6)(7,8,9)", "(1,4,7)(2,5,8)(3,6,9)"], 9)?);
    out.push(parse(&["(1,2)", "(1,3,5,7,9,11)(2,4,6,8,10,12)"], 12)?);
    out.push(crate::constructions::data::vendored_group("psl2_7").map_err(|e| e.to_string())?);
    out.push(crate::constructions::data::vendored_group("psl2_11").map_err(|e| e.to_string())?);
    let mut rng = oracle::rng(0x5eed);
    while out.len() < 20 {
        let (g, _) = oracle::random_small_group(&mut rng, 12, 100_000);
        if g.degree() >= 4 && g.is_transitive() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Fast algorithms agree with the brute-force oracles.
pub fn criterion_7(seed: u64) -> CriterionResult {
    timed(7, "oracle equivalence", || {
        let designs = oracle_designs()?;
        let mut mismatches = Vec::new();
        for (name, d) in &designs {
            let fast = verify_symmetric(d).ok().map(|p| (p.v, p.k, p.lambda));
            let slow = oracle::brute_symmetric(d.v(), d.blocks());
            if fast != slow {
                mismatches.push(format!("{name}: {fast:?} vs {slow:?}"));
            }
        }

        let mut rng = oracle::rng(seed);
        for i in 0..25 {
            let (g, order) = oracle::random_small_group(&mut rng, 9, 10_000);
            if g.order() != BigUint::from(order) {
                mismatches.push(format!("random group {i}: chain {} vs closure {order}", g.order()));
            }
        }

        let groups = transitive_test_groups()?;
        let mut block_checks = 0;
        for g in &groups {
            let gens = oracle::generator_images(g);
            for b in 1..g.degree() {
                let fast = g.minimal_block(0, b).map_err(|e| e.to_string())?;
                let slow = oracle::exhaustive_minimal_block(g.degree(), &gens, 0, b);
                block_checks += 1;
                if fast != slow {
                    mismatches.push(format!("degree {} block(1,{}): {fast:?} vs {slow:?}", g.degree(), b + 1));
                }
            }
        }

        let rows = load_catalog().map_err(|e| e.to_string())?;
        let limit = BigUint::from(10_000_000u32);
        let mut scanned = 0;
        for row in rows.iter().filter(|r| r.k_bound <= limit) {
            let fast = admissible(&row.v, &row.k_bound, row.required_lambda.as_ref(), None, seed)
                .map_err(|e| e.to_string())?;
            let fast: Vec<(u128, u128)> = fast
                .iter()
                .map(|p| (u128::try_from(&p.k).unwrap(), u128::try_from(&p.lambda).unwrap()))
                .collect();
            let v = u128::try_from(&row.v).map_err(|e| e.to_string())?;
            let bound = u128::try_from(&row.k_bound).map_err(|e| e.to_string())?;
            let l = row.required_lambda.as_ref().map(|l| u128::try_from(l).unwrap());
            let slow = oracle::brute_admissible(v, bound, l);
            scanned += 1;
            if fast != slow {
                mismatches.push(format!("{}: {fast:?} vs {slow:?}", row.id));
            }
        }

        let summary = format!(
            "{} designs, 25 random groups, {} groups / {block_checks} minimal blocks, {scanned} catalog rows",
            designs.len(),
            groups.len()
        );
        if mismatches.is_empty() {
            Ok(summary)
        } else {
            Err(format!("{summary}; {}", mismatches.join(" | ")))
        }
    })
}

/// `k | λd` for the nontrivial subdegrees of each shipped group.
pub fn criterion_8() -> CriterionResult {
    timed(8, "k divides λd for every subdegree", || {
        let mut seen = Vec::new();
        for name in ["fano_complement", "paley_11_5_2", "paley_complement_11_6_3", "unitary_45_12_3"] {
            let inst = catalog(name).map_err(|e| e.to_string())?;
            let g = inst.group.as_ref().ok_or(format!("{name}: no group"))?;
            let subs = g.subdegrees(0).map_err(|e| e.to_string())?;
            let (k, l) = (inst.expected.k as u64, inst.expected.lambda as u64);
            ensure(subdegree_condition(k, l, &subs), || format!("{name}: k={k} λ={l} subdegrees {subs:?}"))?;
            seen.push(format!("{name} {subs:?}"));
        }
        Ok(seen.join(", "))
    })
}

/// Runs all eight criteria in order.
pub fn run_all(jobs: usize, seed: u64) -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(jobs, seed),
        criterion_5(),
        criterion_6(),
        criterion_7(seed),
        criterion_8(),
    ]
}
