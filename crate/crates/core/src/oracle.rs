//! Exact irreducible character values of `S_n`.
//!
//! Values come from the Murnaghan-Nakayama rule on beta-sets; degrees come
//! from the hook length formula.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, full_partitions_of, partitions_of, Partition};
use crate::BigRational;

/// A shape indexing an irreducible character: weakly decreasing positive rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: &[u32]) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(alloc::format!("rows {rows:?} not weakly decreasing")));
        }
        Ok(Self::from_rows_lossy(rows))
    }

    /// Sorts rows and drops zeros.
    pub fn from_rows_lossy(rows: &[u32]) -> Self {
        let mut rows: Vec<u32> = rows.iter().copied().filter(|&r| r > 0).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { rows }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn n(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        let cols = (0..width)
            .map(|j| self.rows.iter().filter(|&&r| r > j).count() as u32)
            .collect();
        YoungDiagram { rows: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook lengths row by row.
    pub fn hooks(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                (0..r)
                    .map(|j| (r - j) + (conj.rows[j as usize] - i as u32) - 1)
                    .collect()
            })
            .collect()
    }

    /// The staircase `(k, k-1, .., 1)` of size `k(k+1)/2`.
    pub fn staircase(k: u32) -> Self {
        YoungDiagram {
            rows: (1..=k).rev().collect(),
        }
    }

    /// The unique 3-core of size `n` vanishing at transpositions, when `n`
    /// is a generalized octagonal number `k(3k-2)` or `k(3k+2)`.
    pub fn octagonal(n: u32) -> Option<Self> {
        for k in 1u32.. {
            if k * (3 * k - 2) > n {
                return None;
            }
            if k * (3 * k - 2) == n {
                let mut rows: Vec<u32> = (0..k).map(|i| 3 * k - 2 - 2 * i).collect();
                for j in (1..k).rev() {
                    rows.extend([j, j]);
                }
                return Some(YoungDiagram { rows });
            }
            if k * (3 * k + 2) == n {
                let mut rows: Vec<u32> = (0..k).map(|i| 3 * k - 2 * i).collect();
                rows.extend([k, k]);
                for j in (1..k).rev() {
                    rows.extend([j, j]);
                }
                return Some(YoungDiagram { rows });
            }
        }
        None
    }

    /// Every shape of size `n`, starting from `(n)`, reverse lexicographic.
    pub fn all(n: u32) -> Vec<Self> {
        full_partitions_of(n)
            .into_iter()
            .map(|rows| YoungDiagram { rows })
            .collect()
    }

    fn beta_set(&self) -> Vec<u32> {
        let m = self.rows.len() as u32;
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r + (m - 1 - i as u32))
            .collect()
    }

    fn from_beta(betas: &mut [u32]) -> Self {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = betas.len() as u32;
        let rows: Vec<u32> = betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (m - 1 - i as u32))
            .filter(|&r| r > 0)
            .collect();
        YoungDiagram { rows }
    }

    /// Shapes left after removing a rim hook of length `len`, with signs.
    pub fn remove_rim_hooks(&self, len: u32) -> Vec<(Self, i32)> {
        let betas = self.beta_set();
        let mut out = Vec::new();
        for (idx, &b) in betas.iter().enumerate() {
            if b < len || betas.contains(&(b - len)) {
                continue;
            }
            let target = b - len;
            let between = betas.iter().filter(|&&c| c > target && c < b).count();
            let mut next = betas.clone();
            next[idx] = target;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            out.push((Self::from_beta(&mut next), sign));
        }
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        let mut first = true;
        let mut i = 0;
        while i < self.rows.len() {
            let r = self.rows[i];
            let mut j = i;
            while j < self.rows.len() && self.rows[j] == r {
                j += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{r}^{}", j - i)?;
            } else {
                write!(f, "{r}")?;
            }
            i = j;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Accepts `5,2,2`, `5,2^2` or `[5,2^2]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        let mut rows = Vec::new();
        for item in body.split([',', '.']).map(str::trim).filter(|t| !t.is_empty()) {
            let (part, mult) = match item.split_once('^') {
                Some((p, m)) => (p, m),
                None => (item, "1"),
            };
            let bad = || Error::Input(alloc::format!("bad shape entry '{item}'"));
            let part: u32 = part.trim().parse().map_err(|_| bad())?;
            let mult: u32 = mult.trim().parse().map_err(|_| bad())?;
            if part == 0 {
                return Err(bad());
            }
            rows.extend(core::iter::repeat_n(part, mult as usize));
        }
        if rows.is_empty() {
            return Err(Error::Input(String::from("empty shape")));
        }
        Ok(Self::from_rows_lossy(&rows))
    }
}

/// `n! / prod(hooks)`.
pub fn hook_degree(shape: &YoungDiagram) -> BigInt {
    let prod = shape
        .hooks()
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, &h| acc * h);
    factorial(shape.n()) / prod
}

/// Memoized Murnaghan-Nakayama evaluator. Each memo entry is keyed by the
/// remaining shape and the remaining non-trivial cycles.
#[derive(Default)]
pub struct MnOracle {
    memo: BTreeMap<(YoungDiagram, Vec<u32>), BigInt>,
    degrees: BTreeMap<YoungDiagram, BigInt>,
}

impl MnOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn degree(&mut self, shape: &YoungDiagram) -> BigInt {
        if let Some(d) = self.degrees.get(shape) {
            return d.clone();
        }
        let d = hook_degree(shape);
        self.degrees.insert(shape.clone(), d.clone());
        d
    }

    /// `chi_shape(cls)`; the class is padded with fixed points up to `shape.n()`.
    pub fn value(&mut self, shape: &YoungDiagram, cls: &Partition) -> Result<BigInt> {
        if cls.supp() > shape.n() {
            return Err(Error::Domain(alloc::format!(
                "class {cls} does not exist in S_{}",
                shape.n()
            )));
        }
        Ok(self.value_rec(shape, cls.parts()))
    }

    fn value_rec(&mut self, shape: &YoungDiagram, parts: &[u32]) -> BigInt {
        let Some((&len, rest)) = parts.split_first() else {
            return self.degree(shape);
        };
        let key = (shape.clone(), parts.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut acc = BigInt::zero();
        for (next, sign) in shape.remove_rim_hooks(len) {
            let v = self.value_rec(&next, rest);
            if sign > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    /// `rho = chi(cls) / chi(1)`.
    pub fn ratio(&mut self, shape: &YoungDiagram, cls: &Partition) -> Result<BigRational> {
        let v = self.value(shape, cls)?;
        Ok(BigRational::new(v, self.degree(shape)))
    }

    /// `omega = |cls| chi(cls) / chi(1)`, checked to be an integer.
    pub fn omega(&mut self, shape: &YoungDiagram, cls: &Partition) -> Result<BigRational> {
        let w = self.ratio(shape, cls)? * BigRational::from_integer(cls.class_size(shape.n())?);
        if !w.is_integer() {
            return Err(Error::Internal(alloc::format!("omega of {shape} at {cls} is {w}")));
        }
        Ok(w)
    }

    /// One row of the character table over `classes`.
    pub fn row(&mut self, shape: &YoungDiagram, classes: &[Partition]) -> Result<Vec<BigInt>> {
        classes.iter().map(|c| self.value(shape, c)).collect()
    }
}

/// One-shot value without a shared memo.
pub fn mn_value(shape: &YoungDiagram, cls: &Partition) -> Result<BigInt> {
    MnOracle::new().value(shape, cls)
}

pub fn ratio(shape: &YoungDiagram, cls: &Partition) -> Result<BigRational> {
    MnOracle::new().ratio(shape, cls)
}

pub fn omega(shape: &YoungDiagram, cls: &Partition) -> Result<BigRational> {
    MnOracle::new().omega(shape, cls)
}

/// Full character table of `S_n`. Rows follow [`YoungDiagram::all`], columns
/// follow the class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: u32,
    classes: Vec<Partition>,
    characters: Vec<YoungDiagram>,
    values: Vec<Vec<BigInt>>,
}

/// Largest `n` for which the full orthogonality relations are checked.
pub const FULL_VALIDATION_MAX_N: u32 = 10;

impl CharTable {
    /// Computes and validates the table, refusing `n > max_n`.
    pub fn compute(n: u32, max_n: u32) -> Result<Self> {
        Self::guard(n, max_n)?;
        let classes = partitions_of(n);
        let characters = YoungDiagram::all(n);
        let mut oracle = MnOracle::new();
        let values = characters
            .iter()
            .map(|shape| oracle.row(shape, &classes))
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(n, classes, characters, values)
    }

    pub fn guard(n: u32, max_n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::Input(String::from("n must be positive")));
        }
        if n > max_n {
            return Err(Error::ResourceGuard(alloc::format!(
                "table for n={n} exceeds the configured maximum {max_n}"
            )));
        }
        Ok(())
    }

    /// Assembles a table from precomputed rows and validates it.
    pub fn from_parts(
        n: u32,
        classes: Vec<Partition>,
        characters: Vec<YoungDiagram>,
        values: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        let table = CharTable {
            n,
            classes,
            characters,
            values,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn characters(&self) -> &[YoungDiagram] {
        &self.characters
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.values[i]
    }

    pub fn value(&self, character: usize, class: usize) -> &BigInt {
        &self.values[character][class]
    }

    pub fn degree(&self, character: usize) -> &BigInt {
        &self.values[character][0]
    }

    pub fn character_index(&self, shape: &YoungDiagram) -> Option<usize> {
        self.characters.iter().position(|s| s == shape)
    }

    pub fn class_index(&self, class: &Partition) -> Option<usize> {
        self.classes.binary_search(class).ok()
    }

    pub fn ratio(&self, character: usize, class: usize) -> BigRational {
        BigRational::new(self.values[character][class].clone(), self.degree(character).clone())
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let p = partitions_of(n).len();
        let bad = |msg: String| Err(Error::Internal(alloc::format!("table S_{n}: {msg}")));
        if self.classes.len() != p || self.characters.len() != p || self.values.len() != p {
            return bad(String::from("wrong dimensions"));
        }
        if self.values.iter().any(|r| r.len() != p) {
            return bad(String::from("ragged rows"));
        }
        if self.classes.first().is_none_or(|c| !c.is_identity()) {
            return bad(String::from("first class is not the identity"));
        }
        let sizes: Vec<BigInt> = self
            .classes
            .iter()
            .map(|c| c.class_size(n))
            .collect::<Result<_>>()?;
        let order = factorial(n);
        let mut sum_sq = BigInt::zero();
        for (i, row) in self.values.iter().enumerate() {
            if !row[0].is_positive() {
                return bad(alloc::format!("degree of {} not positive", self.characters[i]));
            }
            sum_sq += &row[0] * &row[0];
            // orthogonality against the trivial character
            let s: BigInt = row.iter().zip(&sizes).map(|(v, c)| v * c).sum();
            let expected = if self.characters[i].rows().len() == 1 {
                order.clone()
            } else {
                BigInt::zero()
            };
            if s != expected {
                return bad(alloc::format!("row {} fails orthogonality", self.characters[i]));
            }
            // integrality of central characters
            for (j, v) in row.iter().enumerate() {
                if !(v * &sizes[j]).is_multiple_of(&row[0]) {
                    return bad(alloc::format!(
                        "omega of {} at {} not integral",
                        self.characters[i],
                        self.classes[j]
                    ));
                }
            }
        }
        if sum_sq != order {
            return bad(String::from("sum of squared degrees differs from n!"));
        }
        if n <= FULL_VALIDATION_MAX_N {
            for a in 0..p {
                for b in a..p {
                    let s: BigInt = (0..p)
                        .map(|j| &self.values[a][j] * &self.values[b][j] * &sizes[j])
                        .sum();
                    let expected = if a == b { order.clone() } else { BigInt::zero() };
                    if s != expected {
                        return bad(alloc::format!("rows {a},{b} not orthogonal"));
                    }
                    let s: BigInt = (0..p).map(|i| &self.values[i][a] * &self.values[i][b]).sum();
                    let expected = if a == b {
                        &order / &sizes[a]
                    } else {
                        BigInt::zero()
                    };
                    if s != expected {
                        return bad(alloc::format!("columns {a},{b} not orthogonal"));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn class(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(hook_degree(&shape("5")), BigInt::one());
        assert_eq!(hook_degree(&shape("2,1")), BigInt::from(2));
        assert_eq!(hook_degree(&YoungDiagram::staircase(3)), BigInt::from(16));
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_value(&shape("2,1"), &class("3")).unwrap(), BigInt::from(-1));
        assert_eq!(mn_value(&shape("2,1"), &class("2")).unwrap(), BigInt::zero());
        assert_eq!(mn_value(&shape("5,2,2"), &class("3")).unwrap(), BigInt::zero());
        assert_eq!(mn_value(&shape("5,2,2"), &class("2,2")).unwrap(), BigInt::zero());
        assert!(mn_value(&shape("2,1"), &class("4")).is_err());
        for mu in partitions_of(6) {
            let v = mn_value(&shape("1^6"), &mu).unwrap();
            assert_eq!(v, BigInt::from(mu.sign()));
        }
    }

    #[test]
    fn s3_table() {
        let t = CharTable::compute(3, 25).unwrap();
        let rows: Vec<Vec<i64>> = t
            .values()
            .iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect();
        // classes (), (2), (3); shapes [3], [2,1], [1^3]
        assert_eq!(rows, [[1, 1, 1], [2, 0, -1], [1, -1, 1]]);
        let t1 = CharTable::compute(1, 25).unwrap();
        assert_eq!(t1.values(), &[alloc::vec![BigInt::one()]]);
        assert_eq!(CharTable::compute(26, 25).unwrap_err(), Error::ResourceGuard(
            String::from("table for n=26 exceeds the configured maximum 25")
        ));
    }

    #[test]
    fn octagonal_shapes() {
        let got: Vec<(u32, String)> = [1, 5, 8, 16, 21, 33]
            .iter()
            .map(|&n| (n, alloc::format!("{}", YoungDiagram::octagonal(n).unwrap())))
            .collect();
        let expected = [
            (1, "[1]"),
            (5, "[3,1^2]"),
            (8, "[4,2,1^2]"),
            (16, "[6,4,2^2,1^2]"),
            (21, "[7,5,3,2^2,1^2]"),
            (33, "[9,7,5,3^2,2^2,1^2]"),
        ];
        for ((n, s), (m, t)) in got.iter().zip(expected) {
            assert_eq!((*n, s.as_str()), (m, t));
        }
        assert!(YoungDiagram::octagonal(6).is_none());
        for n in [1, 5, 8, 16, 21, 33] {
            assert_eq!(YoungDiagram::octagonal(n).unwrap().n(), n);
        }
    }

    #[test]
    fn conjugates() {
        assert_eq!(shape("3,1").conjugate(), shape("2,1,1"));
        assert!(YoungDiagram::staircase(4).is_self_conjugate());
        assert_eq!(shape("[5,2^2]"), shape("5,2,2"));
    }
}
