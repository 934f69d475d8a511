//! Connection counts `|{x' in x^G : x'y in mu}|` for a fixed `y`.
//!
//! Three independent routes: enumeration in `S_n`, the class-algebra
//! character sum, and polynomials in `N` (interpolated, or read off an
//! exact census of cycle placements relative to `y`).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{interpolate_from, UniPoly};
use crate::error::{Error, Result};
use crate::oracle::{MnOracle, YoungDiagram};
use crate::partition::{factorial, Partition};
use crate::perm::{for_each_in_class, Perm};
use crate::BigRational;

/// Default cap on the number of elements enumerated by [`count_brute`].
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Enumerates `x'` in the class of `x` against the canonical `y`.
pub fn count_brute(x: &Partition, y: &Partition, target: &Partition, n: u32, cap: u64) -> Result<BigInt> {
    let size = x.class_size(n)?;
    if size > BigInt::from(cap) {
        return Err(Error::ResourceGuard(alloc::format!(
            "class {x} has {size} elements in S_{n}, above the cap {cap}"
        )));
    }
    let y_perm = Perm::canonical(y, n)?;
    if target.supp() > n {
        return Ok(BigInt::zero());
    }
    let mut count = 0u64;
    for_each_in_class(x, n, |xp| {
        if xp.compose(&y_perm).cycle_type() == *target {
            count += 1;
        }
    })?;
    Ok(BigInt::from(count))
}

/// `|x^G||z^G|/n! * sum_chi chi(x) chi(y) chi(z) / chi(1)`.
pub fn count_char_formula(
    oracle: &mut MnOracle,
    x: &Partition,
    y: &Partition,
    target: &Partition,
    n: u32,
) -> Result<BigInt> {
    let cx = x.class_size(n)?;
    y.class_size(n)?;
    if target.supp() > n {
        return Ok(BigInt::zero());
    }
    if (x.norm() + y.norm() + target.norm()) % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let cz = target.class_size(n)?;
    let mut sum = BigRational::zero();
    for shape in YoungDiagram::all(n) {
        let a = oracle.value(&shape, x)?;
        if a.is_zero() {
            continue;
        }
        let b = oracle.value(&shape, y)?;
        if b.is_zero() {
            continue;
        }
        let c = oracle.value(&shape, target)?;
        sum += BigRational::new(a * b * c, oracle.degree(&shape));
    }
    let total = sum * BigRational::from_integer(cx * cz) / BigRational::from_integer(factorial(n));
    if !total.is_integer() {
        return Err(Error::Internal(alloc::format!(
            "non-integral connection count for {x},{y},{target} at n={n}"
        )));
    }
    Ok(total.to_integer())
}

/// Degree bound for the count of `r`-cycles: at most `r` fixed points of `y`
/// can be moved.
pub fn count_degree_bound(r: u32) -> usize {
    r as usize
}

/// First abscissa used for interpolation.
pub fn sample_start(r: u32, y: &Partition, target: &Partition) -> u32 {
    target.supp().max(y.supp() + r)
}

/// The count as a polynomial in `N`, interpolated through character-sum
/// values with one extra consistency point.
pub fn count_poly(oracle: &mut MnOracle, r: u32, y: &Partition, target: &Partition) -> Result<UniPoly> {
    if r < 2 {
        return Err(Error::Input(alloc::format!("x must be a cycle of length >= 2, got {r}")));
    }
    let x = Partition::cycle(r);
    let start = sample_start(r, y, target);
    interpolate_from(i64::from(start), count_degree_bound(r), 1, |n| {
        count_char_formula(oracle, &x, y, target, n as u32).map(BigRational::from_integer)
    })
}

/// Exact counts of elements `x'` of the class `x` by the class of `x'y`, as
/// polynomials valid for every `n >= supp(y)`.
///
/// Writing the cycles of `x'` one after another gives a sequence of
/// `supp(x)` distinct points. Points outside the support of `y` are
/// interchangeable, so a pattern with `j` inside points stands for
/// `(N - supp(y))` falling `supp(x) - j` sequences, and every `x'` arises from
/// `prod p^a a!` sequences.
pub fn count_census(x: &Partition, y: &Partition) -> Result<BTreeMap<Partition, UniPoly>> {
    if x.is_identity() {
        let mut out = BTreeMap::new();
        out.insert(y.clone(), UniPoly::one());
        return Ok(out);
    }
    let r = x.supp();
    let s = y.supp();
    let mut by_inside: Vec<BTreeMap<Partition, u64>> = alloc::vec![BTreeMap::new(); r as usize + 1];
    let y_perm = Perm::canonical(y, s + r)?;
    let mut walk = CensusWalk {
        blocks: x.parts(),
        s,
        y: &y_perm,
        seq: Vec::with_capacity(r as usize),
        used: alloc::vec![false; s as usize],
        acc: &mut by_inside,
    };
    walk.rec(0);
    let mut out: BTreeMap<Partition, UniPoly> = BTreeMap::new();
    let inv = BigRational::new(1.into(), x.cycle_symmetry());
    for (j, counts) in by_inside.into_iter().enumerate() {
        let outside = r - j as u32;
        let weight = UniPoly::falling_factorial(outside).shift(-i64::from(s)).scale(&inv);
        for (class, c) in counts {
            let term = weight.scale(&BigRational::from_integer(c.into()));
            let slot = out.entry(class).or_insert_with(UniPoly::zero);
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

struct CensusWalk<'a> {
    blocks: &'a [u32],
    s: u32,
    y: &'a Perm,
    seq: Vec<u32>,
    used: Vec<bool>,
    acc: &'a mut [BTreeMap<Partition, u64>],
}

impl CensusWalk<'_> {
    fn rec(&mut self, outside: u32) {
        let r: u32 = self.blocks.iter().sum();
        if self.seq.len() as u32 == r {
            let n = self.y.degree();
            let mut images: Vec<u32> = (0..n).collect();
            let mut start = 0;
            for &len in self.blocks {
                let cycle = &self.seq[start..start + len as usize];
                for (i, &a) in cycle.iter().enumerate() {
                    images[a as usize] = cycle[(i + 1) % cycle.len()];
                }
                start += len as usize;
            }
            let x = Perm::from_images(images).expect("cycles on distinct points");
            let class = x.compose(self.y).cycle_type();
            *self.acc[(r - outside) as usize].entry(class).or_insert(0) += 1;
            return;
        }
        for p in 0..self.s {
            if self.used[p as usize] {
                continue;
            }
            self.used[p as usize] = true;
            self.seq.push(p);
            self.rec(outside);
            self.seq.pop();
            self.used[p as usize] = false;
        }
        // the next unused outside point, labelled in order of appearance
        self.seq.push(self.s + outside);
        self.rec(outside + 1);
        self.seq.pop();
    }
}

/// Memo of census results keyed by `(x, y)`.
#[derive(Default)]
pub struct CensusCache {
    memo: BTreeMap<(Partition, Partition), BTreeMap<Partition, UniPoly>>,
}

impl CensusCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, x: &Partition, y: &Partition) -> Result<&BTreeMap<Partition, UniPoly>> {
        let key = (x.clone(), y.clone());
        if !self.memo.contains_key(&key) {
            let value = count_census(x, y)?;
            self.memo.insert(key.clone(), value);
        }
        Ok(&self.memo[&key])
    }

    pub fn count(&mut self, x: &Partition, y: &Partition, target: &Partition) -> Result<UniPoly> {
        Ok(self.get(x, y)?.get(target).cloned().unwrap_or_else(UniPoly::zero))
    }
}

/// Evaluates a census polynomial at a concrete `n` as an integer.
pub fn eval_count(p: &UniPoly, n: u32) -> Result<BigInt> {
    let v = p.eval_int(i64::from(n));
    if !v.is_integer() {
        return Err(Error::Internal(alloc::format!("count polynomial {p} non-integral at {n}")));
    }
    Ok(v.to_integer())
}

/// True when each cycle of `y` meets the support of `x` in at most one point.
pub fn meets_each_cycle_once(x: &Perm, y: &Perm) -> bool {
    let n = y.degree();
    let mut seen = alloc::vec![false; n as usize];
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut hits = 0;
        let mut i = start;
        while !seen[i as usize] {
            seen[i as usize] = true;
            if x.apply(i) != i {
                hits += 1;
            }
            i = y.apply(i);
        }
        if hits > 1 {
            return false;
        }
    }
    true
}
