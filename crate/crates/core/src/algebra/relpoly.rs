use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::RationalFunction;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::BigRational;

/// A power product of class variables `t_lambda`, stored with variables in
/// decreasing class order and positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Partition, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(class: Partition) -> Self {
        Self::power(class, 1)
    }

    pub fn power(class: Partition, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Monomial {
            factors: alloc::vec![(class, exp)],
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Partition, u32)>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, (c, e)| acc.mul(&Self::power(c, e)))
    }

    pub fn factors(&self) -> &[(Partition, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, class: &Partition) -> u32 {
        self.factors
            .iter()
            .find(|(c, _)| c == class)
            .map_or(0, |(_, e)| *e)
    }

    /// Largest variable present.
    pub fn leading_var(&self) -> Option<&Partition> {
        self.factors.first().map(|(c, _)| c)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = &self.factors[i];
            let (b, eb) = &other.factors[j];
            match a.cmp(b) {
                Ordering::Greater => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for (c, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 == *c {
                let oe = other.factors[j].1;
                match e.cmp(&oe) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((c.clone(), e - oe)),
                }
                j += 1;
            } else {
                if j < other.factors.len() && other.factors[j].0 > *c {
                    return None;
                }
                out.push((c.clone(), *e));
            }
        }
        (j == other.factors.len()).then_some(Monomial { factors: out })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Partition, u32> = BTreeMap::new();
        for (c, e) in self.factors.iter().chain(&other.factors) {
            let slot = map.entry(c.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Monomial {
            factors: map.into_iter().rev().collect(),
        }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.factors
            .iter()
            .all(|(c, _)| other.degree_in(c) == 0)
    }

    pub fn eval(&self, assignment: &BTreeMap<Partition, BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::one();
        for (c, e) in &self.factors {
            let v = assignment
                .get(c)
                .ok_or_else(|| Error::Input(alloc::format!("no value for t_{c}")))?;
            acc *= num_traits::pow(v.clone(), *e as usize);
        }
        Ok(acc)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (c, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(&alloc::format!("t_{c}"));
            if *e > 1 {
                out.push_str(&alloc::format!("^{e}"));
            }
        }
        out
    }
}

impl Ord for Monomial {
    /// Lexicographic order with variables ranked by the class order.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.factors.iter().zip(&other.factors) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => match a.1.cmp(&b.1) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
                ord => return ord,
            }
        }
        self.factors.len().cmp(&other.factors.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            f.write_str(&self.render())
        }
    }
}

/// Polynomial in class variables with coefficients in `Q(N)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RelationPoly {
    terms: BTreeMap<Monomial, RationalFunction>,
}

impl RelationPoly {
    pub fn zero() -> Self {
        RelationPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(class: Partition) -> Self {
        Self::term(RationalFunction::one(), Monomial::var(class))
    }

    pub fn term(c: RationalFunction, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RelationPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, RationalFunction)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.leading_term().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RationalFunction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RationalFunction {
        self.terms.get(m).cloned().unwrap_or_else(RationalFunction::zero)
    }

    /// Largest term under the lexicographic class order.
    pub fn leading_term(&self) -> Option<(&Monomial, &RationalFunction)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&RationalFunction> {
        self.terms.values().next_back()
    }

    /// All variables, in decreasing class order.
    pub fn variables(&self) -> Vec<Partition> {
        let mut vars: Vec<Partition> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(c, _)| c.clone()))
            .collect();
        vars.sort_by(|a, b| b.cmp(a));
        vars.dedup();
        vars
    }

    pub fn degree_in(&self, class: &Partition) -> u32 {
        self.terms.keys().map(|m| m.degree_in(class)).max().unwrap_or(0)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.inv().expect("stored coefficients are nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RelationPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &RationalFunction, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RelationPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `N = n` and each `t_lambda` from `assignment`.
    pub fn eval(&self, n: i64, assignment: &BTreeMap<Partition, BigRational>) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c.eval_int(n)? * m.eval(assignment)?;
        }
        Ok(acc)
    }

    /// Replaces `t_class` by `value` everywhere.
    pub fn substitute(&self, class: &Partition, value: &RelationPoly) -> Self {
        let mut powers: Vec<RelationPoly> = alloc::vec![RelationPoly::one()];
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(class) as usize;
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            while powers.len() <= e {
                let next = powers.last().expect("non-empty") * value;
                powers.push(next);
            }
            let rest = m
                .div(&Monomial::power(class.clone(), e as u32))
                .expect("power divides");
            out = &out + &powers[e].mul_term(c, &rest);
        }
        out
    }

    /// Sets every listed variable to zero.
    pub fn kill_vars(&self, classes: &[Partition]) -> Self {
        RelationPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| classes.iter().all(|c| m.degree_in(c) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Collects terms by exponent of `class`: index `i` holds the cofactor of `t_class^i`.
    pub fn coefficients_in(&self, class: &Partition) -> Vec<RelationPoly> {
        let deg = self.degree_in(class) as usize;
        let mut out = alloc::vec![RelationPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.degree_in(class);
            let rest = m
                .div(&Monomial::power(class.clone(), e))
                .expect("power divides");
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Canonical one-line rendering, terms in decreasing monomial order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.is_negative_leading() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let compound = mag.is_polynomial() && mag.num().coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
            if m.is_one() {
                if neg && compound {
                    out.push_str(&alloc::format!("({})", mag.render()));
                } else {
                    out.push_str(&mag.render());
                }
            } else if mag.is_one() {
                out.push_str(&m.render());
            } else {
                let coeff = mag.render();
                if compound {
                    out.push_str(&alloc::format!("({coeff})*{}", m.render()));
                } else {
                    out.push_str(&alloc::format!("{coeff}*{}", m.render()));
                }
            }
        }
        out
    }
}

impl fmt::Display for RelationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RelationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &RelationPoly {
    type Output = RelationPoly;
    fn add(self, rhs: &RelationPoly) -> RelationPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RelationPoly {
    type Output = RelationPoly;
    fn sub(self, rhs: &RelationPoly) -> RelationPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &RelationPoly {
    type Output = RelationPoly;
    fn mul(self, rhs: &RelationPoly) -> RelationPoly {
        let mut out = RelationPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &RelationPoly {
    type Output = RelationPoly;
    fn neg(self) -> RelationPoly {
        RelationPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RelationPoly {
            type Output = RelationPoly;
            fn $m(self, rhs: RelationPoly) -> RelationPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RelationPoly {
    type Output = RelationPoly;
    fn neg(self) -> RelationPoly {
        -&self
    }
}

impl From<RationalFunction> for RelationPoly {
    fn from(c: RationalFunction) -> Self {
        RelationPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UniPoly;

    fn t(s: &str) -> RelationPoly {
        RelationPoly::var(s.parse().unwrap())
    }

    #[test]
    fn squares_and_cancellation() {
        let a = &t("2") * &t("2");
        assert_eq!(a, RelationPoly::term(RationalFunction::one(), Monomial::power("2".parse().unwrap(), 2)));
        assert!((&a - &a).is_zero());
        let s = &t("2") + &t("3");
        let sq = &s * &s;
        let expected = &(&(&t("2") * &t("2")) + &(&t("2") * &t("3")).scale(&RationalFunction::from_int(2)))
            + &(&t("3") * &t("3"));
        assert_eq!(sq, expected);
        assert_eq!(sq.render(), "t_(3)^2 + 2*t_(3)*t_(2) + t_(2)^2");
    }

    #[test]
    fn lex_order_ranks_classes() {
        let big = Monomial::var("2^2".parse().unwrap());
        let small = Monomial::power("3".parse().unwrap(), 5);
        assert!(big > small);
        let m1 = Monomial::from_factors([("3".parse().unwrap(), 1), ("2".parse().unwrap(), 2)]);
        let m2 = Monomial::var("3".parse().unwrap());
        assert!(m1 > m2);
        assert!(m2.divides(&m1));
        assert_eq!(m1.div(&m2), Some(Monomial::power("2".parse().unwrap(), 2)));
        assert_eq!(m2.div(&m1), None);
    }

    #[test]
    fn evaluation() {
        let mut assignment = BTreeMap::new();
        assignment.insert("2".parse().unwrap(), BigRational::new((-1).into(), 3.into()));
        assert_eq!(
            t("2").eval(7, &assignment).unwrap(),
            BigRational::new((-1).into(), 3.into())
        );
        assert_eq!(RelationPoly::zero().eval(4, &assignment).unwrap(), BigRational::zero());
        assert!(t("3").eval(4, &assignment).is_err());
        let pole = RelationPoly::constant(
            RationalFunction::new(UniPoly::one(), UniPoly::linear_root(4)).unwrap(),
        );
        assert_eq!(pole.eval(4, &assignment), Err(Error::Pole(4)));
    }
}
