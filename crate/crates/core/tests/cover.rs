use std::collections::BTreeSet;

use charrel_core::cover::*;
use charrel_core::oracle::{mn_value, CharTable, MnOracle, YoungDiagram};
use charrel_core::{BigRational, Partition};
use num_traits::Zero;
use proptest::prelude::*;

fn table(n: u32) -> CharTable {
    CharTable::compute(n, 25).unwrap()
}

fn cls(s: &str) -> Partition {
    s.parse().unwrap()
}

const Z3: [u32; 7] = [5, 6, 8, 9, 10, 12, 21];

#[test]
fn z_equals_three_exactly_on_the_list() {
    for n in 4..=21 {
        let t = table(n);
        let r = z_k(&t, None, 3).unwrap();
        if Z3.contains(&n) {
            let CoverOutcome::Found { size, witness } = &r.outcome else {
                panic!("n={n}: {:?}", r.outcome)
            };
            assert_eq!(*size, 3, "n={n}");
            assert!(verify_cover(&t, None, witness));
            // no pair suffices
            assert_eq!(z_k(&t, None, 2).unwrap().value(), None, "n={n}");
        } else {
            assert_ne!(r.value(), Some(3), "n={n}");
        }
    }
}

#[test]
fn covers_beyond_three() {
    // frozen from the search: 14 and 17 need four, the rest admit no cover
    for (n, expect) in [(14, Some(4)), (17, Some(4)), (7, None), (11, None), (15, None), (20, None)] {
        let r = z_k(&table(n), None, 4).unwrap();
        assert_eq!(r.value(), expect, "n={n}");
        if expect.is_none() {
            assert!(matches!(r.outcome, CoverOutcome::NoCover { .. }));
        }
    }
    let r = z_k(&table(15), None, 4).unwrap();
    assert_eq!(r.outcome, CoverOutcome::NoCover { uncovered: vec![cls("3")] });
}

#[test]
fn limit_is_guarded() {
    let t = table(6);
    assert!(z_k(&t, None, 0).is_err());
    assert!(z_k(&t, None, 5).is_err());
    assert!(matches!(z_k(&t, None, 2).unwrap().outcome, CoverOutcome::ExceedsLimit { limit: 2 }));
}

#[test]
fn z_k_monotone_in_k() {
    for n in 5..=10 {
        let t = table(n);
        let vals: Vec<Option<usize>> = (1..=5).map(|k| z_k(&t, Some(k), 4).unwrap().value()).collect();
        for w in vals.windows(2) {
            match (w[0], w[1]) {
                (Some(a), Some(b)) => assert!(a <= b, "n={n}: {vals:?}"),
                (None, Some(_)) => panic!("n={n}: {vals:?}"),
                _ => {}
            }
        }
        assert!(vals[1].is_none_or(|v| v >= 2), "n={n}");
    }
    // a single class: Z_1 = 1 as soon as some character vanishes at (2)
    assert_eq!(z_k(&table(4), Some(1), 1).unwrap().value(), Some(1));
}

#[test]
fn square_triangular_witnesses() {
    assert_eq!(triangular_squares(2000), [1, 2, 9, 50, 289, 1682]);
    for (rows, n) in [(vec![5, 2, 2], 9u32), (vec![14, 6, 6, 6, 6, 5, 3, 3, 1], 50)] {
        let shape = YoungDiagram::new(&rows).unwrap();
        assert_eq!(shape.n(), n);
        for c in ["3", "2^2"] {
            assert!(mn_value(&shape, &cls(c)).unwrap().is_zero(), "{rows:?} at {c}");
        }
        assert!(!mn_value(&shape, &cls("2")).unwrap().is_zero());
        let t = BigRational::from_integer((n * (n - 1) / 2).into());
        assert!(is_integer_square(&t));
    }
}

#[test]
fn small_class_rules_hold() {
    for n in 4..=16 {
        assert_eq!(small_class_violations(&table(n)), vec![], "n={n}");
    }
    // a covering pair puts two of the three zeros on one character
    for n in 4..=10 {
        let t = table(n);
        if z_k(&t, Some(2), 2).unwrap().value() == Some(2) {
            let square = is_integer_square(&BigRational::from_integer((n * (n - 1) / 2).into()));
            assert!(square || n % 4 <= 1 || n % 3 != 2, "n={n}");
        }
    }
    // (2) and (3) vanish together at n = 5, which is 1 mod 4 but 2 mod 3
    let t = table(5);
    let row = t.character_index(&YoungDiagram::new(&[3, 1, 1]).unwrap()).unwrap();
    for c in ["2", "3"] {
        assert!(t.value(row, t.class_index(&cls(c)).unwrap()).is_zero());
    }
}

#[test]
fn forced_three_cycle_value() {
    let mut found = vec![];
    for n in 6..=16 {
        for (shape, rho3) in forced_three_cycle_witnesses(&table(n)) {
            let expect = BigRational::new(1.into(), ((n - 2) * (n - 5)).into());
            assert_eq!(rho3, expect, "{shape}");
            found.push((n, shape.rows().to_vec()));
        }
    }
    assert_eq!(found, vec![(7, vec![4, 1, 1, 1]), (15, vec![6, 3, 3, 1, 1, 1])]);
}

#[test]
fn scan_matches_cases_for_small_n() {
    for n in 8..=13 {
        let report = forbidden_set_scan(&table(n)).unwrap();
        assert!(report.alarms.is_empty(), "n={n}: {:?}", report.alarms);
        assert!(!report.rich.is_empty());
    }
    assert!(forbidden_set_scan(&table(7)).is_err());
}

#[test]
fn scan_case_for_five_two_two() {
    let t = table(9);
    let report = forbidden_set_scan(&t).unwrap();
    let shape = YoungDiagram::new(&[5, 2, 2]).unwrap();
    let (_, zeros) = report.rich.iter().find(|(s, _)| *s == shape).unwrap();
    let c: BTreeSet<Partition> = zeros.iter().cloned().collect();
    assert!(c.contains(&cls("3")) && c.contains(&cls("2^2")));
    let row = t.character_index(&shape).unwrap();
    let rho3 = t.ratio(row, t.class_index(&cls("3")).unwrap());
    let rho22 = t.ratio(row, t.class_index(&cls("2^2")).unwrap());
    assert_eq!(allowed_case(9, &c, &rho3, &rho22), Some(AllowedCase::TwoOfTheFirstThree));
}

#[test]
fn scan_reports_finite_exceptions() {
    // the allowed cases only bind patterns recurring for infinitely many n
    let r14 = forbidden_set_scan(&table(14)).unwrap();
    let shapes: BTreeSet<Vec<u32>> = r14.alarms.iter().map(|a| a.shape.rows().to_vec()).collect();
    assert_eq!(shapes, BTreeSet::from([vec![6, 3, 2, 1, 1, 1]]));
    let r15 = forbidden_set_scan(&table(15)).unwrap();
    let shapes: BTreeSet<Vec<u32>> = r15.alarms.iter().map(|a| a.shape.rows().to_vec()).collect();
    assert_eq!(shapes, BTreeSet::from([vec![6, 3, 3, 1, 1, 1]]));
    for n in 16..=18 {
        assert!(forbidden_set_scan(&table(n)).unwrap().alarms.is_empty(), "n={n}");
    }
}

#[test]
fn five_and_three_squared_exclude_small_classes() {
    for n in 10..=12 {
        let t = table(n);
        let idx = |s: &str| t.class_index(&cls(s)).unwrap();
        for r in 0..t.characters().len() {
            if t.value(r, idx("5")).is_zero() && t.value(r, idx("3^2")).is_zero() {
                for c in ["2", "2^2", "3"] {
                    assert!(!t.value(r, idx(c)).is_zero(), "n={n} {}", t.characters()[r]);
                }
            }
        }
    }
}

fn check_family(f: Family) {
    let mut o = MnOracle::new();
    let c = family_ratio(&mut o, &f, f.default_threshold(), 27).unwrap();
    assert!(c.agrees(), "{f:?}: {} vs {}", c.formula, c.oracle);
}

#[test]
fn two_hook_families() {
    let tuples = [(10, 0, 3, 2, 0), (10, 0, 0, 0, 0), (10, 1, 1, 1, 1), (11, 0, 2, 1, 0), (12, 1, 0, 0, 2), (10, 2, 1, 0, 3)];
    for (a, b, c, d, e) in tuples {
        check_family(Family::TwoHooks2 { a, b, c, d, e });
        check_family(Family::TwoHooks3 { a, b, c, d, e });
    }
    let mut o = MnOracle::new();
    let f = Family::TwoHooks2 { a: 10, b: 0, c: 3, d: 2, e: 0 };
    assert_eq!(family_ratio(&mut o, &f, 10, 27).unwrap().oracle, BigRational::from_integer(3.into()));
    // c = d - 1, b = e gives -d
    let f = Family::TwoHooks2 { a: 10, b: 1, c: 2, d: 3, e: 1 };
    assert_eq!(f.formula().unwrap(), BigRational::from_integer((-3).into()));
    check_family(f);
}

#[test]
fn row_families() {
    for (k, b) in [(8, [0, 0]), (8, [1, 0]), (8, [0, 1]), (8, [2, 1]), (9, [0, 0]), (8, [3, 0])] {
        check_family(Family::TwoRows { k, a: vec![2, 1], b: b.to_vec() });
    }
    for (k, b, c) in [(10, 0, 0), (10, 3, 2), (11, 1, 4), (12, 2, 0), (13, 0, 2)] {
        check_family(Family::TwoRowsCols { k, a: vec![1], b: vec![b], c: vec![c] });
    }
    let mut o = MnOracle::new();
    for (k, b, c) in [(5, [0, 0], [0, 0]), (4, [2, 1], [1, 1]), (3, [1, 2], [3, 0])] {
        let f = Family::TwoRowsCols { k, a: vec![2, 1], b: b.to_vec(), c: c.to_vec() };
        assert!(family_ratio(&mut o, &f, 3, 27).unwrap().agrees(), "{f:?}");
    }
}

#[test]
fn family_guards() {
    let mut o = MnOracle::new();
    let small = Family::TwoHooks2 { a: 5, b: 0, c: 0, d: 0, e: 0 };
    assert!(matches!(family_ratio(&mut o, &small, 10, 27), Err(charrel_core::Error::Domain(_))));
    let big = Family::TwoHooks3 { a: 20, b: 0, c: 0, d: 0, e: 0 };
    assert!(matches!(family_ratio(&mut o, &big, 10, 27), Err(charrel_core::Error::ResourceGuard(_))));
    assert!(two_hooks_shape(3, 0, 2, 0, 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn two_hooks_formula_matches_oracle(a in 6u32..12, b in 0u32..4, c in 0u32..4, d in 0u32..4, e in 0u32..4) {
        prop_assume!(a + e >= d + 2 && a + b >= c + 2);
        let mut o = MnOracle::new();
        for f in [Family::TwoHooks2 { a, b, c, d, e }, Family::TwoHooks3 { a, b, c, d, e }] {
            let check = family_ratio(&mut o, &f, 0, 40).unwrap();
            prop_assert!(check.agrees(), "{:?}", f);
        }
    }

    #[test]
    fn cover_witness_is_a_cover(n in 5u32..=10, cap in 1u32..=4) {
        let t = table(n);
        if let CoverOutcome::Found { witness, .. } = z_k(&t, Some(cap), 4).unwrap().outcome {
            prop_assert!(verify_cover(&t, Some(cap), &witness));
        }
    }
}
