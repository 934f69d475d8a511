//! Conjugacy-class labels of symmetric groups.
//!
//! A [`Partition`] stores only the parts of size at least 2, so one label
//! names "the same" class in every `S_n` with `n >= supp`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::UniPoly;
use crate::error::{Error, Result};
use crate::BigRational;

/// A normalized partition: parts `>= 2`, weakly decreasing. Empty is the identity class.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn identity() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The cycle class `(k)`; `k <= 1` gives the identity.
    pub fn cycle(k: u32) -> Self {
        Self::from_parts_unchecked(if k >= 2 { alloc::vec![k] } else { Vec::new() })
    }

    /// Sorts decreasingly and drops parts of size 1.
    pub fn normalize(parts: &[i64]) -> Result<Self> {
        if let Some(bad) = parts.iter().find(|&&p| p <= 0) {
            return Err(Error::Input(alloc::format!("non-positive part {bad}")));
        }
        let mut kept: Vec<u32> = parts
            .iter()
            .filter(|&&p| p > 1)
            .map(|&p| u32::try_from(p).map_err(|_| Error::Input("part too large".into())))
            .collect::<Result<_>>()?;
        kept.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts: kept })
    }

    /// Builds from parts that may contain 1s or be unsorted.
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut kept: Vec<u32> = parts.iter().copied().filter(|&p| p > 1).collect();
        kept.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: kept }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 2));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_identity(&self) -> bool {
        self.parts.is_empty()
    }

    /// True for a single cycle `(k)`, `k >= 2`.
    pub fn is_cycle(&self) -> bool {
        self.parts.len() == 1
    }

    /// Number of moved points.
    pub fn supp(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Minimal number of transpositions composing to an element of this class.
    pub fn norm(&self) -> u32 {
        self.parts.iter().map(|p| p - 1).sum()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(1)
    }

    pub fn smallest_part(&self) -> u32 {
        self.parts.last().copied().unwrap_or(1)
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplicity of `part` (parts of size 1 are not tracked).
    pub fn count_of(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    /// Removes one copy of `part`; `None` if absent.
    pub fn without_part(&self, part: u32) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// Adds a part (a part of size 1 is a no-op).
    pub fn with_part(&self, part: u32) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(part);
        Partition::from_parts(&parts)
    }

    /// The full partition of `n` (1-parts appended).
    pub fn padded(&self, n: u32) -> Result<Vec<u32>> {
        let s = self.supp();
        if n < s {
            return Err(Error::Domain(alloc::format!("class {self} does not exist in S_{n}")));
        }
        let mut full = self.parts.clone();
        full.extend(core::iter::repeat_n(1, (n - s) as usize));
        Ok(full)
    }

    /// Order of an element of this class.
    pub fn element_order(&self) -> u64 {
        self.parts
            .iter()
            .fold(1u64, |acc, &p| num_integer::lcm(acc, u64::from(p)))
    }

    /// Sign of the permutations in this class.
    pub fn sign(&self) -> i32 {
        if self.norm().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The centralizer order's class-dependent factor `prod p^a a!` (1-parts excluded).
    pub fn cycle_symmetry(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, a) in self.multiplicities() {
            acc *= BigInt::from(p).pow(a);
            acc *= factorial(a);
        }
        acc
    }

    /// Number of elements of this cycle type in `S_n`.
    pub fn class_size(&self, n: u32) -> Result<BigInt> {
        let s = self.supp();
        if n < s {
            return Err(Error::Domain(alloc::format!("class {self} does not exist in S_{n}")));
        }
        Ok(factorial(n) / (self.cycle_symmetry() * factorial(n - s)))
    }

    /// Class size as a polynomial in `N`; agrees with [`Self::class_size`] for `n >= supp`.
    pub fn class_size_poly(&self) -> UniPoly {
        let falling = UniPoly::falling_factorial(self.supp());
        falling.scale(&BigRational::new(BigInt::one(), self.cycle_symmetry()))
    }

    /// Canonical text form, e.g. `(3^2,2)`; identity renders `()`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl Ord for Partition {
    /// Norm first; on ties the reverse dominance order, padding the shorter
    /// part list with 1s.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.norm().cmp(&other.norm()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let len = self.parts.len().max(other.parts.len());
        for i in 0..len {
            let a = self.parts.get(i).copied().unwrap_or(1);
            let b = other.parts.get(i).copied().unwrap_or(1);
            if a != b {
                // smaller part at the first difference means larger class
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (p, a)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3^2,2`, `(3^2,2)`, `3,3,2`, `()`, `id` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(trimmed)
            .trim();
        if inner.is_empty() || inner == "id" || inner == "1" {
            return Ok(Partition::identity());
        }
        let mut parts: Vec<i64> = Vec::new();
        for item in inner.split([',', '.']) {
            let item = item.trim();
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (item, "1"),
            };
            let base: i64 = base
                .parse()
                .map_err(|_| Error::Input(alloc::format!("bad part `{item}`")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Input(alloc::format!("bad exponent in `{item}`")))?;
            parts.extend(core::iter::repeat_n(base, exp));
        }
        Partition::normalize(&parts)
    }
}

/// Parses a list of classes: `(2^2),(4),(3,2)`, `2^2;4;3,2`, or the compact
/// `2^2,4,3.2` (parts inside a class joined by `.`). When a `;` is present it
/// is the only class separator.
pub fn parse_class_list(s: &str) -> Result<Vec<Partition>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains('(') {
        let mut out = Vec::new();
        let mut rest = s;
        while let Some(start) = rest.find('(') {
            let end = rest[start..]
                .find(')')
                .ok_or_else(|| Error::Input("unbalanced parenthesis".into()))?;
            out.push(rest[start..start + end + 1].parse()?);
            rest = &rest[start + end + 1..];
        }
        return Ok(out);
    }
    if s.contains(';') {
        return s.split(';').map(|item| item.trim().parse::<Partition>()).collect();
    }
    s.split(',')
        .map(|item| item.trim().parse::<Partition>())
        .collect()
}

/// All partitions of `n`, normalized and sorted by the class order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_partitions(n, n, &mut current, &mut out);
    let mut classes: Vec<Partition> = out.iter().map(|p| Partition::from_parts(p)).collect();
    classes.sort();
    classes
}

/// All full partitions of `n` (1-parts included), parts decreasing, in
/// reverse lexicographic order.
pub fn full_partitions_of(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_partitions(n, n, &mut current, &mut out);
    out
}

fn gen_partitions(rem: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rem == 0 {
        out.push(current.clone());
        return;
    }
    for p in (1..=max.min(rem)).rev() {
        current.push(p);
        gen_partitions(rem - p, p, current, out);
        current.pop();
    }
}

/// Classes `lambda` with `1 <= norm(lambda) <= k`, sorted by the class order.
pub fn classes_with_norm_at_most(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for norm in 1..=k {
        out.extend(classes_with_norm(norm));
    }
    out.sort();
    out
}

/// Classes of norm exactly `k` (parts minus one form a partition of `k`).
pub fn classes_with_norm(k: u32) -> Vec<Partition> {
    let mut out: Vec<Partition> = full_partitions_of(k)
        .into_iter()
        .map(|p| Partition::from_parts(&p.iter().map(|x| x + 1).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Partition::normalize(&[2, 1, 1, 1]).unwrap(), p("2"));
        assert_eq!(Partition::normalize(&[1, 1]).unwrap(), Partition::identity());
        assert_eq!(Partition::normalize(&[2, 3, 2]).unwrap().parts(), &[3, 2, 2]);
        assert!(Partition::normalize(&[2, 0]).is_err());
        assert!(Partition::normalize(&[-1]).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(p("3,2").norm(), 3);
        assert_eq!(Partition::identity().norm(), 0);
        assert_eq!(p("2^3").norm(), 3);
    }

    #[test]
    fn ordering_chain() {
        let chain = ["2^3", "5", "4,2", "3^2", "3,2^2"].map(p);
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                assert_eq!(chain[i].cmp(&chain[j]), i.cmp(&j), "{} vs {}", chain[i], chain[j]);
            }
        }
        assert!(p("2") < p("3"));
        assert_eq!(p("3,2").cmp(&p("3,2")), Ordering::Equal);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p("2").class_size(4).unwrap(), BigInt::from(6));
        assert_eq!(p("3,2").class_size(5).unwrap(), BigInt::from(20));
        assert_eq!(Partition::identity().class_size(7).unwrap(), BigInt::one());
        assert!(p("3,2").class_size(4).is_err());
    }

    #[test]
    fn class_size_poly_matches() {
        for cls in classes_with_norm_at_most(5) {
            let poly = cls.class_size_poly();
            assert_eq!(poly.degree(), Some(cls.supp() as usize));
            for n in cls.supp()..cls.supp() + 6 {
                let v = poly.eval(&BigRational::from_integer(BigInt::from(n)));
                assert_eq!(v, BigRational::from_integer(cls.class_size(n).unwrap()));
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let four = partitions_of(4);
        assert_eq!(four, vec![Partition::identity(), p("2"), p("3"), p("2^2"), p("4")]);
        assert_eq!(partitions_of(0), vec![Partition::identity()]);
        assert_eq!(classes_with_norm_at_most(2), vec![p("2"), p("3"), p("2^2")]);
        assert_eq!(classes_with_norm_at_most(4).len(), 11);
        assert_eq!(classes_with_norm_at_most(1), vec![p("2")]);
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("3^2,2").to_string(), "(3^2,2)");
        assert_eq!(p("(3,3,2)").to_string(), "(3^2,2)");
        assert_eq!(p("id").to_string(), "()");
        assert_eq!(
            parse_class_list("2^2,4,2^3").unwrap(),
            vec![p("2^2"), p("4"), p("2^3")]
        );
        assert_eq!(parse_class_list("(3,2),(5)").unwrap(), vec![p("3,2"), p("5")]);
        assert_eq!(parse_class_list("3.2;5").unwrap(), vec![p("3,2"), p("5")]);
    }
}
