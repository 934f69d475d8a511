use std::collections::BTreeMap;

use charrel_core::oracle::{hook_degree, mn_value, CharTable, MnOracle, YoungDiagram};
use charrel_core::partition::{factorial, partitions_of, Partition};
use charrel_core::perm::{for_each_in_class, Perm};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn orthogonality_up_to_ten() {
    for n in 1..=10 {
        let t = CharTable::compute(n, 25).unwrap();
        let sizes: Vec<BigInt> = t.classes().iter().map(|c| c.class_size(n).unwrap()).collect();
        let p = t.classes().len();
        for i in 0..p {
            for j in 0..p {
                let row: BigInt = (0..p).map(|c| &sizes[c] * t.value(i, c) * t.value(j, c)).sum();
                let col: BigInt = (0..p).map(|r| t.value(r, i) * t.value(r, j)).sum();
                let delta = if i == j { factorial(n) } else { BigInt::zero() };
                assert_eq!(row, delta, "rows {i},{j} of S_{n}");
                let delta = if i == j { factorial(n) / &sizes[i] } else { BigInt::zero() };
                assert_eq!(col, delta, "columns {i},{j} of S_{n}");
            }
        }
    }
}

#[test]
fn small_tables() {
    let t1 = CharTable::compute(1, 25).unwrap();
    assert_eq!(t1.values(), [vec![BigInt::from(1)]]);
    let t3 = CharTable::compute(3, 25).unwrap();
    let mut degrees: Vec<i64> = (0..3).map(|r| t3.degree(r).try_into().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, [1, 1, 2]);
    let t9 = CharTable::compute(9, 25).unwrap();
    let row = t9.character_index(&YoungDiagram::new(&[5, 2, 2]).unwrap()).unwrap();
    for c in ["2^2", "3"] {
        let col = t9.class_index(&c.parse().unwrap()).unwrap();
        assert!(t9.value(row, col).is_zero());
    }
}

#[test]
fn resource_guard() {
    assert!(matches!(CharTable::compute(26, 25), Err(charrel_core::Error::ResourceGuard(_))));
}

#[test]
fn hook_degrees_match_rule() {
    for n in 1..=12 {
        for shape in YoungDiagram::all(n) {
            assert_eq!(hook_degree(&shape), mn_value(&shape, &Partition::identity()).unwrap(), "{shape}");
        }
    }
}

#[test]
fn class_sum_identity_by_enumeration() {
    // |x^G| chi(x) chi(y) = chi(1) sum_{x' in x^G} chi(x'y)
    for n in 2..=7 {
        let t = CharTable::compute(n, 25).unwrap();
        let classes = t.classes().to_vec();
        for x in &classes {
            let size = x.class_size(n).unwrap();
            for y in &classes {
                let y_perm = Perm::canonical(y, n).unwrap();
                let mut census: BTreeMap<usize, u64> = BTreeMap::new();
                for_each_in_class(x, n, |xp| {
                    let z = xp.compose(&y_perm).cycle_type();
                    *census.entry(t.class_index(&z).unwrap()).or_default() += 1;
                })
                .unwrap();
                let (xi, yi) = (t.class_index(x).unwrap(), t.class_index(y).unwrap());
                for r in 0..classes.len() {
                    let lhs = &size * t.value(r, xi) * t.value(r, yi);
                    let sum: BigInt = census.iter().map(|(&z, &k)| BigInt::from(k) * t.value(r, z)).sum();
                    assert_eq!(lhs, t.degree(r) * sum, "S_{n}, {x} {y}");
                }
            }
        }
    }
}

fn shape_of(n: u32) -> impl Strategy<Value = YoungDiagram> {
    let all = YoungDiagram::all(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn self_conjugate_vanish_on_odd_classes(shape in (1u32..=14).prop_flat_map(shape_of)) {
        let conj = shape.conjugate();
        let mut oracle = MnOracle::new();
        for c in partitions_of(shape.n()) {
            let v = oracle.value(&shape, &c).unwrap();
            if c.norm() % 2 == 1 {
                // conjugation multiplies by the sign
                prop_assert_eq!(oracle.value(&conj, &c).unwrap(), -v.clone());
                if shape == conj {
                    prop_assert!(v.is_zero());
                }
            } else {
                prop_assert_eq!(oracle.value(&conj, &c).unwrap(), v);
            }
        }
    }

    #[test]
    fn omega_is_an_integer(shape in (2u32..=12).prop_flat_map(shape_of)) {
        let mut oracle = MnOracle::new();
        for c in partitions_of(shape.n()) {
            prop_assert!(oracle.omega(&shape, &c).unwrap().is_integer());
        }
    }
}
