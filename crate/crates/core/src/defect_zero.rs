//! Values of the 2-defect-zero (staircase) characters and of the 3-defect-zero
//! characters vanishing at transpositions, as polynomials in `n`.
//!
//! For the staircase character `psi_k` of `S_n`, `n = k(k+1)/2`,
//! `Q_s(n) rho_k(lambda) = P_lambda(n)` with `s = supp(lambda)`. The
//! octagonal analogue `Q_s(n) rho(lambda) = P~_lambda(n)` holds at
//! `n = k(3k +- 2)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{lagrange_interpolate, RationalFunction, UniPoly};
use crate::connection::CensusCache;
use crate::error::{Error, Result};
use crate::oracle::{MnOracle, YoungDiagram};
use crate::partition::{factorial, Partition};
use crate::BigRational;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `prod_{i=1}^{b} (a - i(i+1)/2)`.
pub fn delta(a: &BigRational, b: u32) -> BigRational {
    (1..=i64::from(b)).map(|i| a - rat(i * (i + 1) / 2)).product()
}

/// `Delta(x, b)` as a polynomial in `x`.
pub fn delta_poly(b: u32) -> UniPoly {
    UniPoly::from_roots((1..=i64::from(b)).map(|i| i * (i + 1) / 2))
}

/// The closed form of `Delta(a(a+1)/2, b)` for `a > b`.
pub fn delta_triangular_closed(a: u32, b: u32) -> BigRational {
    let num = factorial(a + b + 1);
    let den = factorial(a - b - 1) * BigInt::from(2).pow(b) * BigInt::from(a) * BigInt::from(a + 1);
    BigRational::new(num, den)
}

pub fn catalan(k: u32) -> BigInt {
    factorial(2 * k) / (factorial(k + 1) * factorial(k))
}

/// `Q_i(x) = prod_{a=1}^{i-1} (x - a)`; empty for `i <= 1`.
pub fn q_poly(i: u32) -> UniPoly {
    UniPoly::from_roots(1..i64::from(i.max(1)))
}

pub fn triangular(k: u32) -> u32 {
    k * (k + 1) / 2
}

/// Generalized octagonal numbers `k(3k - 2)`, `k(3k + 2)` up to `limit`, increasing.
pub fn octagonal_numbers(limit: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for k in 1u32.. {
        let a = k * (3 * k - 2);
        if a > limit {
            break;
        }
        out.push(a);
        let b = k * (3 * k + 2);
        if b <= limit {
            out.push(b);
        }
    }
    out
}

fn has_even_part(lambda: &Partition) -> bool {
    lambda.parts().iter().any(|p| p % 2 == 0)
}

/// `(-2)^(-norm/2) prod C((p - 1)/2)` over the parts.
pub fn staircase_leading_coeff(lambda: &Partition) -> BigRational {
    let half = lambda.norm() / 2;
    let cat: BigInt = lambda.parts().iter().map(|&p| catalan((p - 1) / 2)).product();
    let sign = if half.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    BigRational::new(sign * cat, BigInt::from(2).pow(half))
}

/// Largest `k` with `k(k+1)/2 < supp` or `2k - 1 < largest part`.
pub fn staircase_zero_bound(lambda: &Partition) -> u32 {
    let s = lambda.supp();
    let l1 = lambda.largest_part();
    let mut m = 0;
    for k in 1u32.. {
        if triangular(k) < s || 2 * k < l1 + 1 {
            m = k;
        } else if triangular(k) >= s && 2 * k > l1 {
            break;
        }
    }
    m
}

/// `P_lambda` together with its class; the zero polynomial for classes with an even part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircasePoly {
    pub lambda: Partition,
    pub poly: UniPoly,
}

impl StaircasePoly {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `P_lambda(n) / Q_supp(n)`.
    pub fn ratio_at(&self, n: u32) -> Result<BigRational> {
        let q = q_poly(self.lambda.supp()).eval_int(i64::from(n));
        if q.is_zero() {
            return Err(Error::Pole(i64::from(n)));
        }
        Ok(self.poly.eval_int(i64::from(n)) / q)
    }

    /// Degree, leading coefficient and forced zeros.
    pub fn check(&self) -> Result<()> {
        let lambda = &self.lambda;
        let fail = |what: &str| Err(Error::Internal(alloc::format!("P_{lambda}: {what}")));
        if has_even_part(lambda) {
            return if self.poly.is_zero() { Ok(()) } else { fail("nonzero with an even part") };
        }
        if lambda.is_identity() {
            return if self.poly.is_one() { Ok(()) } else { fail("identity value") };
        }
        let deg = (lambda.supp() - 1 - lambda.norm() / 2) as usize;
        if self.poly.degree() != Some(deg) {
            return fail("degree");
        }
        if self.poly.leading_coeff() != staircase_leading_coeff(lambda) {
            return fail("leading coefficient");
        }
        let m = staircase_zero_bound(lambda);
        if self.poly.div_exact(&delta_poly(m)).is_none() {
            return fail("divisibility by Delta");
        }
        Ok(())
    }
}

/// Memoized staircase polynomials.
#[derive(Default)]
pub struct Staircase {
    memo: BTreeMap<Partition, UniPoly>,
}

impl Staircase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn p(&mut self, lambda: &Partition) -> Result<StaircasePoly> {
        let poly = self.poly(lambda)?;
        Ok(StaircasePoly {
            lambda: lambda.clone(),
            poly,
        })
    }

    fn poly(&mut self, lambda: &Partition) -> Result<UniPoly> {
        if lambda.is_identity() {
            return Ok(UniPoly::one());
        }
        if has_even_part(lambda) {
            return Ok(UniPoly::zero());
        }
        if let Some(p) = self.memo.get(lambda) {
            return Ok(p.clone());
        }
        let s = lambda.supp();
        let lr = lambda.smallest_part();
        // y has one part lr replaced by lr - 1; x = (a b) touches that cycle
        let rest = lambda.without_part(lr).expect("smallest part present");
        let mut acc = UniPoly::zero();
        for (v, a) in lambda.multiplicities() {
            let eff = if v == lr { a - 1 } else { a };
            if eff == 0 {
                continue;
            }
            let alpha = rest.without_part(v).expect("part present").with_part(v + lr - 1);
            let p = self.poly(&alpha)?;
            acc = &acc - &p.scale(&rat(i64::from(eff * v)));
        }
        let half = BigRational::new(1.into(), 2.into());
        let top = q_poly(s - 1);
        for j in (1..=lr.saturating_sub(2)).step_by(2) {
            let beta = rest.with_part(j).with_part(lr - 1 - j);
            let p = self.poly(&beta)?;
            let ratio = top
                .div_exact(&q_poly(beta.supp()))
                .ok_or_else(|| Error::Internal(alloc::format!("Q ratio for {beta}")))?;
            acc = &acc - &(&p * &ratio).scale(&half);
        }
        let sp = StaircasePoly {
            lambda: lambda.clone(),
            poly: acc,
        };
        sp.check()?;
        self.memo.insert(lambda.clone(), sp.poly.clone());
        Ok(sp.poly)
    }

    /// `rho_k(lambda)` from `P_lambda`.
    pub fn ratio(&mut self, k: u32, lambda: &Partition) -> Result<BigRational> {
        let n = triangular(k);
        if lambda.supp() > n {
            return Err(Error::Domain(alloc::format!("class {lambda} does not exist in S_{n}")));
        }
        self.p(lambda)?.ratio_at(n)
    }
}

/// Numerator and denominator of `rho_k((2r+1))`:
/// `(-2)^(-r) C(r) Delta(x, r)` over `Q_{2r+1}(x)`.
pub fn staircase_cycle_closed(r: u32) -> (UniPoly, UniPoly) {
    let lead = staircase_leading_coeff(&Partition::cycle(2 * r + 1));
    (delta_poly(r).scale(&lead), q_poly(2 * r + 1))
}

fn display_factor(r: u32, extra: u32, cat: u32) -> Result<RationalFunction> {
    // C(r) C(cat) Delta(x, r) / ((-2)^(r + extra) Q_{2r + 2 + 2 extra}(x))
    let e = r + extra;
    let sign = if e.is_multiple_of(2) { 1 } else { -1 };
    let c = BigRational::new(
        catalan(r) * catalan(cat) * BigInt::from(sign),
        BigInt::from(2).pow(e),
    );
    RationalFunction::new(delta_poly(r).scale(&c), q_poly(2 * r + 2 + 2 * extra))
}

/// The listed closed form of `rho_k((2r+1, 3))` as a function of `n`.
pub fn staircase_display_3(r: u32) -> Result<RationalFunction> {
    let ri = i64::from(r);
    let quad = UniPoly::from_coeffs(alloc::vec![
        rat((2 * ri + 1) * (2 * ri + 3) * (ri + 1)),
        -BigRational::new((12 * ri * ri + 19 * ri + 8).into(), (ri + 2).into()),
        rat(1),
    ]);
    Ok(&RationalFunction::from_poly(quad) * &display_factor(r, 1, 1)?)
}

/// The listed closed form of `rho_k((2r+1, 5))` as a function of `n`.
pub fn staircase_display_5(r: u32) -> Result<RationalFunction> {
    let ri = i64::from(r);
    let cubic = UniPoly::from_coeffs(alloc::vec![
        -BigRational::new(
            ((2 * ri + 1) * (ri + 1) * (2 * ri + 3) * (ri + 2) * (2 * ri + 5)).into(),
            2.into()
        ),
        BigRational::new(
            (20 * ri.pow(4) + 120 * ri.pow(3) + 265 * ri * ri + 228 * ri + 69).into(),
            (ri + 3).into()
        ),
        -BigRational::new((30 * ri * ri + 49 * ri + 27).into(), (ri + 3).into()),
        rat(1),
    ]);
    Ok(&RationalFunction::from_poly(cubic) * &display_factor(r, 2, 2)?)
}

/// `P_lambda` rebuilt by interpolation through oracle values at
/// `n = k(k+1)/2 >= supp`, `k <= k_max`, and the forced zeros below.
pub fn staircase_by_interpolation(oracle: &mut MnOracle, lambda: &Partition, k_max: u32) -> Result<UniPoly> {
    if has_even_part(lambda) {
        return Ok(UniPoly::zero());
    }
    let s = lambda.supp();
    let deg = (s.max(1) - 1 - lambda.norm() / 2) as usize;
    let mut points = Vec::new();
    for k in 1..=staircase_zero_bound(lambda) {
        points.push((i64::from(triangular(k)), BigRational::zero()));
    }
    let q = q_poly(s);
    for k in 1..=k_max {
        let n = triangular(k);
        if n < s || k <= staircase_zero_bound(lambda) {
            continue;
        }
        let value = oracle.ratio(&YoungDiagram::staircase(k), lambda)?;
        points.push((i64::from(n), value * q.eval_int(i64::from(n))));
    }
    if points.len() < deg + 1 {
        return Err(Error::Domain(alloc::format!(
            "{} sample points for degree {deg} at {lambda}",
            points.len()
        )));
    }
    lagrange_interpolate(&points, deg)
}

/// `P~_lambda` together with its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctagonalPoly {
    pub lambda: Partition,
    pub poly: UniPoly,
}

fn octagonal_vanishes(lambda: &Partition) -> bool {
    lambda.norm() % 2 == 1 || lambda.parts().iter().any(|p| p % 3 == 0)
}

/// Octagonal `n` at which `P~_lambda` must vanish.
pub fn octagonal_forced_zeros(lambda: &Partition) -> Vec<u32> {
    let s = lambda.supp();
    let l1 = lambda.largest_part();
    let mut out = Vec::new();
    for k in 1u32.. {
        let minus = k * (3 * k - 2);
        let plus = k * (3 * k + 2);
        if minus >= s && 6 * k >= l1 + 5 {
            break;
        }
        if 6 * k < l1 + 5 || minus < s {
            out.push(minus);
        }
        if 6 * k < l1 + 1 || plus < s {
            out.push(plus);
        }
    }
    out
}

impl OctagonalPoly {
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn ratio_at(&self, n: u32) -> Result<BigRational> {
        let q = q_poly(self.lambda.supp()).eval_int(i64::from(n));
        if q.is_zero() {
            return Err(Error::Pole(i64::from(n)));
        }
        Ok(self.poly.eval_int(i64::from(n)) / q)
    }

    pub fn check(&self) -> Result<()> {
        let lambda = &self.lambda;
        let fail = |what: &str| Err(Error::Internal(alloc::format!("P~_{lambda}: {what}")));
        if octagonal_vanishes(lambda) {
            return if self.poly.is_zero() { Ok(()) } else { fail("nonzero on a vanishing class") };
        }
        if self.poly.degree().is_some_and(|d| d > lambda.norm() as usize) {
            return fail("degree above the norm");
        }
        for n in octagonal_forced_zeros(lambda) {
            if !self.poly.eval_int(i64::from(n)).is_zero() {
                return fail("missing forced zero");
            }
        }
        Ok(())
    }
}

/// Memoized octagonal polynomials, with coefficients from the exact census
/// of `F_{(2), y}` or `F_{(3), y}`.
#[derive(Default)]
pub struct Octagonal {
    census: CensusCache,
    memo: BTreeMap<Partition, UniPoly>,
}

impl Octagonal {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn p(&mut self, lambda: &Partition) -> Result<OctagonalPoly> {
        let poly = self.poly(lambda)?;
        Ok(OctagonalPoly {
            lambda: lambda.clone(),
            poly,
        })
    }

    fn poly(&mut self, lambda: &Partition) -> Result<UniPoly> {
        if lambda.is_identity() {
            return Ok(UniPoly::one());
        }
        if octagonal_vanishes(lambda) {
            return Ok(UniPoly::zero());
        }
        if let Some(p) = self.memo.get(lambda) {
            return Ok(p.clone());
        }
        let (x, y) = if lambda.count_of(2) > 0 {
            (Partition::cycle(2), lambda.without_part(2).expect("part 2"))
        } else {
            let m = lambda.smallest_part();
            (Partition::cycle(3), lambda.without_part(m).expect("part").with_part(m - 2))
        };
        let counts = self.census.get(&x, &y)?.clone();
        let c_lambda = counts
            .get(lambda)
            .filter(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| Error::Internal(alloc::format!("{lambda} not reached from {y}")))?;
        let mut sum = RationalFunction::zero();
        for (sigma, c) in &counts {
            if sigma == lambda || octagonal_vanishes(sigma) {
                continue;
            }
            if sigma > lambda {
                return Err(Error::Internal(alloc::format!("{sigma} above {lambda} from {y}")));
            }
            let p = self.poly(sigma)?;
            if p.is_zero() {
                continue;
            }
            let term = RationalFunction::new(c * &p, q_poly(sigma.supp()))?;
            sum = &sum + &term;
        }
        let factor = RationalFunction::new(q_poly(lambda.supp()), c_lambda)?;
        let value = -(&factor * &sum);
        let poly = value
            .as_poly()
            .cloned()
            .ok_or_else(|| Error::Internal(alloc::format!("P~_{lambda} = {value} is not a polynomial")))?;
        let op = OctagonalPoly {
            lambda: lambda.clone(),
            poly,
        };
        op.check()?;
        self.memo.insert(lambda.clone(), op.poly.clone());
        Ok(op.poly)
    }
}

/// `P~_lambda` by interpolation through oracle values at octagonal
/// `n <= n_max` with `n >= supp`, plus the forced zeros. Needs at least one
/// point beyond `norm + 1` to be a check rather than a fit.
pub fn octagonal_by_interpolation(oracle: &mut MnOracle, lambda: &Partition, n_max: u32) -> Result<UniPoly> {
    if octagonal_vanishes(lambda) {
        return Ok(UniPoly::zero());
    }
    let s = lambda.supp();
    let deg = lambda.norm() as usize;
    let zeros = octagonal_forced_zeros(lambda);
    let mut points: Vec<(i64, BigRational)> = zeros.iter().map(|&n| (i64::from(n), BigRational::zero())).collect();
    let q = q_poly(s);
    for n in octagonal_numbers(n_max) {
        if n < s || zeros.contains(&n) {
            continue;
        }
        let shape = YoungDiagram::octagonal(n).expect("octagonal n");
        let value = oracle.ratio(&shape, lambda)?;
        points.push((i64::from(n), value * q.eval_int(i64::from(n))));
    }
    if points.len() < deg + 1 {
        return Err(Error::Domain(alloc::format!(
            "{} sample points for degree {deg} at {lambda}",
            points.len()
        )));
    }
    lagrange_interpolate(&points, deg)
}

/// Lower bounds for `rho((2^2))` and `rho((3^2))` checked over all of `S_n`.
#[derive(Clone, Debug)]
pub struct LowerBoundReport {
    pub n: u32,
    pub characters: usize,
    pub bound_22: BigRational,
    pub bound_33: BigRational,
    pub min_22: BigRational,
    pub min_33: BigRational,
    pub violations: Vec<(YoungDiagram, Partition)>,
}

impl LowerBoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `-(4n - 6)/((n - 2)(n - 3))`.
pub fn bound_22(n: u32) -> BigRational {
    let n = i64::from(n);
    BigRational::new((-(4 * n - 6)).into(), ((n - 2) * (n - 3)).into())
}

/// `-(36n^5 - 324n^4 + 1200n^3 - 1791n^2 - 120n + 3600)/(4n(n-1)(n-2)(n-3)(n-4)(n-5))`.
pub fn bound_33(n: u32) -> BigRational {
    let num = UniPoly::from_int_coeffs(&[3600, -120, -1791, 1200, -324, 36]).eval_int(i64::from(n));
    let den = UniPoly::from_roots(0..6).scale(&rat(4)).eval_int(i64::from(n));
    -(num / den)
}

pub fn ratio_lower_bounds(oracle: &mut MnOracle, n: u32) -> Result<LowerBoundReport> {
    if n < 6 {
        return Err(Error::Domain(alloc::format!("bounds need n >= 6, got {n}")));
    }
    let c22 = Partition::from_parts(&[2, 2]);
    let c33 = Partition::from_parts(&[3, 3]);
    let (b22, b33) = (bound_22(n), bound_33(n));
    let shapes = YoungDiagram::all(n);
    let mut min_22 = BigRational::one();
    let mut min_33 = BigRational::one();
    let mut violations = Vec::new();
    for shape in &shapes {
        let r22 = oracle.ratio(shape, &c22)?;
        let r33 = oracle.ratio(shape, &c33)?;
        if r22 <= b22 {
            violations.push((shape.clone(), c22.clone()));
        }
        if r33 <= b33 {
            violations.push((shape.clone(), c33.clone()));
        }
        if r22 < min_22 {
            min_22 = r22;
        }
        if r33 < min_33 {
            min_33 = r33;
        }
    }
    debug_assert!(b22.is_negative());
    Ok(LowerBoundReport {
        n,
        characters: shapes.len(),
        bound_22: b22,
        bound_33: b33,
        min_22,
        min_33,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(delta(&rat(10), 3), rat(252));
        assert_eq!(delta(&rat(7), 0), rat(1));
        assert_eq!(catalan(0), 1.into());
        assert_eq!(catalan(3), 5.into());
        assert_eq!(q_poly(2), UniPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(q_poly(5).eval_int(6), rat(120));
        assert_eq!(octagonal_numbers(40), [1, 5, 8, 16, 21, 33, 40]);
    }

    #[test]
    fn first_staircase_polys() {
        let mut st = Staircase::new();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(st.p(&p("3")).unwrap().poly, UniPoly::from_int_coeffs(&[1, -1]).scale(&half));
        assert_eq!(st.p(&p("5")).unwrap().poly, UniPoly::from_roots([1, 3]).scale(&half));
        assert!(st.p(&p("2")).unwrap().is_zero());
        assert_eq!(st.ratio(2, &p("3")).unwrap(), -half);
    }

    #[test]
    fn octagonal_zero_classes() {
        let mut oc = Octagonal::new();
        assert!(oc.p(&p("2")).unwrap().is_zero());
        assert!(oc.p(&p("3,2")).unwrap().is_zero());
        assert!(!oc.p(&p("2^2")).unwrap().is_zero());
    }
}
