use charrel_core::algebra::{RationalFunction, UniPoly};
use charrel_core::defect_zero::*;
use charrel_core::oracle::{MnOracle, YoungDiagram};
use charrel_core::partition::partitions_of;
use charrel_core::{BigRational, Partition};
use num_traits::Zero;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn odd_part_classes(max_supp: u32) -> Vec<Partition> {
    (2..=max_supp)
        .flat_map(partitions_of)
        .filter(|c| !c.is_identity() && c.parts().iter().all(|x| x % 2 == 1))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[test]
fn triangular_delta_closed_form() {
    for a in 2..=12u32 {
        for b in 1..a {
            let n = rat(i64::from(triangular(a)));
            assert_eq!(delta(&n, b), delta_triangular_closed(a, b), "a={a} b={b}");
        }
    }
}

#[test]
fn catalan_convolution() {
    for m in 0..=10u32 {
        let sum: num_bigint::BigInt = (0..=m).map(|h| catalan(h) * catalan(m - h)).sum();
        assert_eq!(sum, catalan(m + 1));
    }
}

#[test]
fn staircase_matches_oracle() {
    let mut st = Staircase::new();
    let mut oracle = MnOracle::new();
    let classes = odd_part_classes(21);
    assert_eq!(classes.len(), 75);
    for lambda in &classes {
        let sp = st.p(lambda).unwrap();
        sp.check().unwrap();
        let mut zeros = 0;
        for k in 1..=6 {
            let n = triangular(k);
            if n < lambda.supp() {
                continue;
            }
            let expected = oracle.ratio(&YoungDiagram::staircase(k), lambda).unwrap();
            assert_eq!(sp.ratio_at(n).unwrap(), expected, "{lambda} at k={k}");
            if expected.is_zero() {
                zeros += 1;
            }
        }
        let deg = sp.poly.degree().unwrap();
        assert!(zeros <= deg, "{lambda}: {zeros} zeros above degree {deg}");
        for k in 1..=staircase_zero_bound(lambda) {
            assert!(sp.poly.eval_int(i64::from(triangular(k))).is_zero());
        }
    }
}

#[test]
fn even_parts_vanish() {
    let mut st = Staircase::new();
    let mut oracle = MnOracle::new();
    for c in ["2", "4", "3,2", "2^2", "5,4", "6,3"] {
        let lambda = p(c);
        assert!(st.p(&lambda).unwrap().is_zero());
        for k in 3..=6 {
            if triangular(k) >= lambda.supp() {
                assert!(oracle.value(&YoungDiagram::staircase(k), &lambda).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn recurrence_agrees_with_interpolation() {
    let mut st = Staircase::new();
    let mut oracle = MnOracle::new();
    let mut compared = 0;
    for lambda in odd_part_classes(13) {
        match staircase_by_interpolation(&mut oracle, &lambda, 10) {
            Ok(q) => {
                assert_eq!(q, st.p(&lambda).unwrap().poly, "{lambda}");
                compared += 1;
            }
            Err(charrel_core::Error::Domain(_)) => {}
            Err(e) => panic!("{lambda}: {e}"),
        }
    }
    assert!(compared >= 15, "only {compared} classes had enough samples");
}

#[test]
fn cycle_closed_forms() {
    let mut st = Staircase::new();
    assert_eq!(
        staircase_cycle_closed(1),
        (UniPoly::from_int_coeffs(&[1, -1]).scale(&BigRational::new(1.into(), 2.into())), UniPoly::from_roots([1, 2]))
    );
    for r in 1..=4u32 {
        let (num, den) = staircase_cycle_closed(r);
        let lambda = Partition::cycle(2 * r + 1);
        assert_eq!(num, st.p(&lambda).unwrap().poly);
        assert_eq!(den, q_poly(2 * r + 1));
    }
}

#[test]
fn two_part_displays() {
    let mut st = Staircase::new();
    for r in 1..=4u32 {
        for (second, display) in [(3, staircase_display_3(r).unwrap()), (5, staircase_display_5(r).unwrap())] {
            let lambda = Partition::from_parts(&[2 * r + 1, second]);
            let sp = st.p(&lambda).unwrap();
            let ours = RationalFunction::new(sp.poly.clone(), q_poly(lambda.supp())).unwrap();
            assert_eq!(ours, display, "{lambda}");
        }
    }
}

fn octagonal_test_classes() -> Vec<Partition> {
    (2..=12).flat_map(partitions_of).filter(|c| c.supp() <= 12).collect::<std::collections::BTreeSet<_>>().into_iter().collect()
}

#[test]
fn octagonal_matches_oracle() {
    let mut oc = Octagonal::new();
    let mut oracle = MnOracle::new();
    let mut nonzero = 0;
    for lambda in octagonal_test_classes() {
        let op = oc.p(&lambda).unwrap();
        op.check().unwrap();
        if !op.is_zero() {
            nonzero += 1;
        }
        for n in [5, 8, 16, 21, 33] {
            if n < lambda.supp() {
                continue;
            }
            let shape = YoungDiagram::octagonal(n).unwrap();
            assert_eq!(op.ratio_at(n).unwrap(), oracle.ratio(&shape, &lambda).unwrap(), "{lambda} at n={n}");
        }
    }
    // 18 classes plus the identity
    assert_eq!(nonzero, 19);
}

#[test]
fn octagonal_shapes_are_three_cores_vanishing_at_transpositions() {
    let mut oracle = MnOracle::new();
    for n in octagonal_numbers(40) {
        let shape = YoungDiagram::octagonal(n).unwrap();
        assert_eq!(shape.n(), n);
        assert!(shape.hooks().iter().flatten().all(|h| h % 3 != 0), "{shape}");
        if n >= 2 {
            assert!(oracle.value(&shape, &p("2")).unwrap().is_zero());
        }
    }
}

#[test]
fn octagonal_agrees_with_interpolation() {
    let mut oc = Octagonal::new();
    let mut oracle = MnOracle::new();
    for c in ["2^2", "4,2", "2^4", "5,2", "4^2", "5,4", "7"] {
        let lambda = p(c);
        let q = octagonal_by_interpolation(&mut oracle, &lambda, 65).unwrap();
        assert_eq!(q, oc.p(&lambda).unwrap().poly, "{lambda}");
    }
}

#[test]
fn lower_bounds_hold() {
    let mut oracle = MnOracle::new();
    for n in 6..=12 {
        let report = ratio_lower_bounds(&mut oracle, n).unwrap();
        assert!(report.holds(), "n={n}: {:?}", report.violations);
        if n == 8 {
            assert_eq!(report.characters, 22);
        }
    }
    assert!(ratio_lower_bounds(&mut oracle, 5).is_err());
}

proptest! {
    #[test]
    fn delta_vanishes_at_triangular_numbers(b in 1u32..10, j in 1u32..10) {
        let v = delta(&rat(i64::from(triangular(j))), b);
        prop_assert_eq!(v.is_zero(), j <= b);
    }

    #[test]
    fn leading_coefficient_formula(parts in prop::collection::vec((1u32..5).prop_map(|h| 2 * h + 1), 1..4)) {
        let lambda = Partition::from_parts(&parts);
        let sp = Staircase::new().p(&lambda).unwrap();
        prop_assert_eq!(sp.poly.leading_coeff(), staircase_leading_coeff(&lambda));
        prop_assert_eq!(sp.poly.degree(), Some((lambda.supp() - 1 - lambda.norm() / 2) as usize));
    }
}
