use charrel_core::connection::{
    count_brute, count_census, count_char_formula, count_poly, eval_count, meets_each_cycle_once,
    DEFAULT_ENUMERATION_CAP,
};
use charrel_core::oracle::MnOracle;
use charrel_core::partition::{classes_with_norm_at_most, partitions_of, Partition};
use charrel_core::perm::{for_each_in_class, Perm};
use proptest::prelude::*;

#[test]
fn brute_force_matches_character_sum() {
    let mut oracle = MnOracle::new();
    for n in 2..=7 {
        let classes = partitions_of(n);
        for x in classes.iter().filter(|c| c.norm() <= 3) {
            for y in &classes {
                for target in &classes {
                    let brute = count_brute(x, y, target, n, DEFAULT_ENUMERATION_CAP).unwrap();
                    assert_eq!(brute, count_char_formula(&mut oracle, x, y, target, n).unwrap(), "S_{n}: {x} {y} {target}");
                }
            }
        }
    }
}

#[test]
fn census_matches_brute_force() {
    for x in classes_with_norm_at_most(3).into_iter().filter(|c| !c.is_identity()) {
        for y in classes_with_norm_at_most(3) {
            let census = count_census(&x, &y).unwrap();
            for n in y.supp().max(x.supp())..=8 {
                for target in partitions_of(n) {
                    let poly = census.get(&target).cloned().unwrap_or_default();
                    let brute = count_brute(&x, &y, &target, n, DEFAULT_ENUMERATION_CAP).unwrap();
                    assert_eq!(eval_count(&poly, n).unwrap(), brute, "{x} * {y} -> {target} at {n}");
                }
            }
        }
    }
}

#[test]
fn interpolated_counts_extrapolate() {
    let mut oracle = MnOracle::new();
    for r in 2..=4 {
        for y in classes_with_norm_at_most(3) {
            let census = count_census(&Partition::cycle(r), &y).unwrap();
            for (target, poly) in census.iter().filter(|(t, _)| t.supp() <= 10) {
                let interp = count_poly(&mut oracle, r, &y, target).unwrap();
                assert_eq!(&interp, poly, "{r}-cycle * {y} -> {target}");
                let far = target.supp().max(y.supp() + r) + r + 2;
                for n in far..far + 3 {
                    let direct = count_char_formula(&mut oracle, &Partition::cycle(r), &y, target, n).unwrap();
                    assert_eq!(eval_count(&interp, n).unwrap(), direct);
                }
            }
        }
    }
}

#[test]
fn guard_on_large_classes() {
    let x = Partition::cycle(2);
    let err = count_brute(&x, &x, &x, 10, 10).unwrap_err();
    assert!(matches!(err, charrel_core::Error::ResourceGuard(_)));
}

#[test]
fn norm_adds_exactly_when_cycles_meet_once() {
    for n in 2..=6 {
        for y in partitions_of(n) {
            let y_perm = Perm::canonical(&y, n).unwrap();
            for r in 2..=n {
                for_each_in_class(&Partition::cycle(r), n, |x| {
                    let merged = x.compose(&y_perm).cycle_type().norm() == y.norm() + r - 1;
                    assert_eq!(merged, meets_each_cycle_once(x, &y_perm), "S_{n} {y}");
                })
                .unwrap();
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn census_totals_class_size(parts in prop::collection::vec(2u32..5, 1..3), yparts in prop::collection::vec(2u32..4, 0..3), extra in 0u32..3) {
        let x = Partition::from_parts(&parts);
        let y = Partition::from_parts(&yparts);
        let n = x.supp().max(y.supp()) + extra;
        let census = count_census(&x, &y).unwrap();
        let total: num_bigint::BigInt = census.values().map(|p| eval_count(p, n).unwrap()).sum();
        prop_assert_eq!(total, x.class_size(n).unwrap());
    }
}
