//! Zero sets of irreducible characters: minimal covers of the nonidentity
//! classes, the scan of zero patterns among classes of norm at most 4, and
//! closed formulas for central character values of hook-like families.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Roots;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::oracle::{CharTable, MnOracle, YoungDiagram};
use crate::partition::{classes_with_norm_at_most, Partition};
use crate::BigRational;

/// Fixed-width bitset over an ordered class list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassSet {
    words: Vec<u64>,
}

impl ClassSet {
    pub fn empty(len: usize) -> Self {
        ClassSet {
            words: alloc::vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        ClassSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// The zeros of one irreducible among the targeted classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroProfile {
    pub shape: YoungDiagram,
    pub zeros: ClassSet,
}

/// The targeted classes: nonidentity classes of `S_n`, optionally with norm at most `cap`.
pub fn target_classes(n: u32, cap: Option<u32>) -> Vec<Partition> {
    crate::partition::partitions_of(n)
        .into_iter()
        .filter(|c| !c.is_identity() && cap.is_none_or(|k| c.norm() <= k))
        .collect()
}

/// One profile per irreducible of the table, in table order.
pub fn zero_profiles(table: &CharTable, cap: Option<u32>) -> (Vec<Partition>, Vec<ZeroProfile>) {
    let targets = target_classes(table.n(), cap);
    let cols: Vec<usize> = targets
        .iter()
        .map(|c| table.class_index(c).expect("class of S_n"))
        .collect();
    let profiles = table
        .characters()
        .iter()
        .enumerate()
        .map(|(i, shape)| {
            let mut zeros = ClassSet::empty(targets.len());
            for (bit, &col) in cols.iter().enumerate() {
                if table.value(i, col).is_zero() {
                    zeros.insert(bit);
                }
            }
            ZeroProfile {
                shape: shape.clone(),
                zeros,
            }
        })
        .collect();
    (targets, profiles)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverOutcome {
    /// A minimum cover of this size exists.
    Found { size: usize, witness: Vec<YoungDiagram> },
    /// No cover with at most `limit` characters.
    ExceedsLimit { limit: usize },
    /// Even all characters together leave a class uncovered.
    NoCover { uncovered: Vec<Partition> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub n: u32,
    pub cap: Option<u32>,
    pub outcome: CoverOutcome,
}

impl CoverResult {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            CoverOutcome::Found { size, .. } => Some(size),
            _ => None,
        }
    }
}

/// Largest accepted search limit.
pub const MAX_COVER_LIMIT: usize = 4;

/// Minimum number of zero sets covering every targeted class.
pub fn min_cover(n: u32, cap: Option<u32>, profiles: &[ZeroProfile], targets: usize, limit: usize) -> Result<CoverResult> {
    if limit == 0 || limit > MAX_COVER_LIMIT {
        return Err(Error::Input(alloc::format!("limit must be in 1..={MAX_COVER_LIMIT}")));
    }
    let all = ClassSet::full(targets);
    let union = profiles
        .iter()
        .fold(ClassSet::empty(targets), |acc, p| acc.union(&p.zeros));
    if union != all {
        let uncovered_idx: Vec<usize> = (0..targets).filter(|&i| !union.contains(i)).collect();
        let classes = target_classes(n, cap);
        return Ok(CoverResult {
            n,
            cap,
            outcome: CoverOutcome::NoCover {
                uncovered: uncovered_idx.into_iter().map(|i| classes[i].clone()).collect(),
            },
        });
    }
    let candidates = undominated(profiles);
    for size in 1..=limit {
        let mut chosen = Vec::with_capacity(size);
        if search(&candidates, &ClassSet::empty(targets), &all, size, &mut chosen) {
            let witness = chosen.iter().map(|&i| candidates[i].shape.clone()).collect();
            return Ok(CoverResult {
                n,
                cap,
                outcome: CoverOutcome::Found { size, witness },
            });
        }
    }
    Ok(CoverResult {
        n,
        cap,
        outcome: CoverOutcome::ExceedsLimit { limit },
    })
}

/// Profiles whose zero set is not contained in another's, ordered by
/// decreasing zero count, ties in table order.
fn undominated(profiles: &[ZeroProfile]) -> Vec<ZeroProfile> {
    let mut order: Vec<usize> = (0..profiles.len()).filter(|&i| !profiles[i].zeros.is_empty()).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(profiles[i].zeros.len()));
    let mut kept: Vec<ZeroProfile> = Vec::new();
    let mut seen: BTreeSet<ClassSet> = BTreeSet::new();
    for i in order {
        let z = &profiles[i].zeros;
        if seen.contains(z) || kept.iter().any(|k| z.is_subset(&k.zeros)) {
            continue;
        }
        seen.insert(z.clone());
        kept.push(profiles[i].clone());
    }
    kept
}

fn search(cands: &[ZeroProfile], covered: &ClassSet, all: &ClassSet, left: usize, chosen: &mut Vec<usize>) -> bool {
    if covered == all {
        return true;
    }
    if left == 0 {
        return false;
    }
    // branch on the uncovered class with the fewest candidates
    let mut best: Option<(usize, Vec<usize>)> = None;
    for class in (0..all.len()).filter(|&c| !covered.contains(c)) {
        let hits: Vec<usize> = (0..cands.len()).filter(|&i| cands[i].zeros.contains(class)).collect();
        if best.as_ref().is_none_or(|(_, b)| hits.len() < b.len()) {
            let empty = hits.is_empty();
            best = Some((class, hits));
            if empty {
                break;
            }
        }
    }
    let (_, hits) = best.expect("an uncovered class");
    for i in hits {
        chosen.push(i);
        if search(cands, &covered.union(&cands[i].zeros), all, left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `Z(n)` or `Z_k(n)` from a character table.
pub fn z_k(table: &CharTable, cap: Option<u32>, limit: usize) -> Result<CoverResult> {
    let (targets, profiles) = zero_profiles(table, cap);
    min_cover(table.n(), cap, &profiles, targets.len(), limit)
}

/// Checks a witness by explicit union.
pub fn verify_cover(table: &CharTable, cap: Option<u32>, witness: &[YoungDiagram]) -> bool {
    let targets = target_classes(table.n(), cap);
    targets.iter().all(|c| {
        let col = table.class_index(c).expect("class");
        witness.iter().any(|s| {
            let row = table.character_index(s).expect("shape");
            table.value(row, col).is_zero()
        })
    })
}

/// `n <= limit` with `n(n-1)/2` a perfect square.
pub fn triangular_squares(limit: u64) -> Vec<u64> {
    (1..=limit)
        .filter(|&n| {
            let t = n * (n - 1) / 2;
            let r = t.sqrt();
            r * r == t
        })
        .collect()
}

pub fn is_integer_square(x: &BigRational) -> bool {
    if !x.is_integer() || x.is_negative() {
        return false;
    }
    let v = x.to_integer();
    let r = v.sqrt();
    r.clone() * r == v
}

/// The eleven classes of norm 1 to 4.
pub fn low_norm_classes() -> Vec<Partition> {
    classes_with_norm_at_most(4).into_iter().filter(|c| !c.is_identity()).collect()
}

/// Which allowed pattern a zero set of size at least 4 among the low-norm
/// classes falls under, for one character of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AllowedCase {
    TwoOfTheFirstThree,
    SquareValue(usize),
    ThreeCycleValue(u8),
    ContainsOddNormFour,
    ThreeCycleFamily,
    DoubleTranspositionFamily,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// The numbers of which one must be a square in the second allowed case.
pub fn square_candidates(n: u32) -> [BigRational; 10] {
    let n = i64::from(n);
    let q = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    [
        q(6 * n * n + 74 * n - 600, 4),
        q(38 * n * n + 34 * n - 192, 28),
        rat(8 * n - 45),
        rat(8 * n - 15),
        q(6 * n * n - 30 * n + 40, 4),
        q(6 * n * n - 70 * n + 120, 4),
        q(11 * n * n - 245 * n + 1350, 8),
        q(2 * n * n + 22 * n - 48, 4),
        q(6 * n * n + 2 * n - 24, 4),
        q(n * n - n, 2),
    ]
}

fn three_cycle_values(n: u32) -> [BigRational; 4] {
    let n = i64::from(n);
    let d = n * (n - 1) * (n - 2);
    [
        BigRational::new((n * n - 25 * n + 60).into(), (2 * d).into()),
        BigRational::new((-(n * n - 33 * n + 140)).into(), (2 * d).into()),
        BigRational::new((12 * (n - 5)).into(), d.into()),
        BigRational::new((-(9 * n * n - 129 * n + 420)).into(), (4 * d).into()),
    ]
}

/// Matches a vanishing set `c` (classes of norm at most 4, `|c| >= 4`) of a
/// character with normalized values `rho3 = rho((3))`, `rho22 = rho((2^2))`.
pub fn allowed_case(n: u32, c: &BTreeSet<Partition>, rho3: &BigRational, rho22: &BigRational) -> Option<AllowedCase> {
    let p = |s: &str| -> Partition { s.parse().expect("class literal") };
    let set = |items: &[&str]| -> BTreeSet<Partition> { items.iter().map(|s| p(s)).collect() };
    let first = set(&["2", "3", "2^2"]);
    if c.intersection(&first).count() == 2 {
        return Some(AllowedCase::TwoOfTheFirstThree);
    }
    if let Some(i) = square_candidates(n).iter().position(is_integer_square) {
        return Some(AllowedCase::SquareValue(i));
    }
    let values = three_cycle_values(n);
    if *rho3 == values[0] {
        return Some(AllowedCase::ThreeCycleValue(3));
    }
    if *rho3 == values[1] && *c == set(&["2", "4", "3,2", "2^3", "4,2", "2^4"]) {
        return Some(AllowedCase::ThreeCycleValue(4));
    }
    let ni = i64::from(n);
    let v22 = BigRational::new(
        (-(2 * ni * ni + 46 * ni - 240)).into(),
        (ni * (ni - 1) * (ni - 2) * (ni - 3)).into(),
    );
    if *rho3 == values[2] && *c == set(&["2", "4", "3,2", "2^3", "4,2", "3,2^2"]) && *rho22 == v22 {
        return Some(AllowedCase::ThreeCycleValue(5));
    }
    if *rho3 == values[3] {
        return Some(AllowedCase::ThreeCycleValue(6));
    }
    let base = set(&["2", "4", "3,2", "2^3"]);
    let top = set(&["5", "4,2", "3^2", "3,2^2", "2^4"]);
    if base.is_subset(c) && c.intersection(&top).count() <= 1 {
        return Some(AllowedCase::ContainsOddNormFour);
    }
    if *c == set(&["3", "3,2", "3^2", "3,2^2"]) {
        return Some(AllowedCase::ThreeCycleFamily);
    }
    if *c == set(&["2^2", "4", "4,2", "3,2^2"]) {
        return Some(AllowedCase::DoubleTranspositionFamily);
    }
    None
}

/// A character whose low-norm zero set contains a subset of size at least 4
/// outside every allowed pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanAlarm {
    pub shape: YoungDiagram,
    pub subset: Vec<Partition>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub n: u32,
    /// Characters with at least 4 low-norm zeros, and those zeros.
    pub rich: Vec<(YoungDiagram, Vec<Partition>)>,
    pub alarms: Vec<ScanAlarm>,
}

/// Scans every irreducible of `S_n` and every subset of size at least 4 of
/// its zeros among the classes of norm 1 to 4.
pub fn forbidden_set_scan(table: &CharTable) -> Result<ScanReport> {
    let n = table.n();
    if n < 8 {
        return Err(Error::Domain(alloc::format!("the scan needs every norm-4 class, n >= 8, got {n}")));
    }
    let classes = low_norm_classes();
    let cols: Vec<usize> = classes.iter().map(|c| table.class_index(c).expect("class")).collect();
    let i3 = table.class_index(&Partition::cycle(3)).expect("class");
    let i22 = table.class_index(&Partition::from_parts(&[2, 2])).expect("class");
    let mut report = ScanReport {
        n,
        ..ScanReport::default()
    };
    for (row, shape) in table.characters().iter().enumerate() {
        let zeros: Vec<Partition> = classes
            .iter()
            .zip(&cols)
            .filter(|(_, &col)| table.value(row, col).is_zero())
            .map(|(c, _)| c.clone())
            .collect();
        if zeros.len() < 4 {
            continue;
        }
        report.rich.push((shape.clone(), zeros.clone()));
        let (rho3, rho22) = (table.ratio(row, i3), table.ratio(row, i22));
        let subset_of = |mask: u32| -> BTreeSet<Partition> {
            zeros
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| c.clone())
                .collect()
        };
        let masks: Vec<u32> = (0u32..(1 << zeros.len())).filter(|m| m.count_ones() >= 4).collect();
        let matching: Vec<u32> = masks
            .iter()
            .copied()
            .filter(|&m| allowed_case(n, &subset_of(m), &rho3, &rho22).is_some())
            .collect();
        // a subset is explained when some matching set between it and the full zero set exists
        for &mask in &masks {
            if !matching.iter().any(|&m| m & mask == mask) {
                report.alarms.push(ScanAlarm {
                    shape: shape.clone(),
                    subset: subset_of(mask).into_iter().collect(),
                });
            }
        }
    }
    Ok(report)
}

/// Characters of `S_n` breaking the rules for joint zeros among `(2), (3), (2^2)`:
/// never all three; `(3), (2^2)` forces `n(n-1)/2` square; `(2), (3)` forces
/// `n = 0, 1 mod 4`; `(2), (2^2)` forces `n = 0, 1 mod 3`.
pub fn small_class_violations(table: &CharTable) -> Vec<(YoungDiagram, &'static str)> {
    let n = table.n();
    if n < 4 {
        return Vec::new();
    }
    let idx = |s: &str| table.class_index(&s.parse().expect("class literal")).expect("class");
    let (i2, i3, i22) = (idx("2"), idx("3"), idx("2^2"));
    let square = is_integer_square(&BigRational::from_integer((u64::from(n) * u64::from(n - 1) / 2).into()));
    let mut out = Vec::new();
    for (r, shape) in table.characters().iter().enumerate() {
        let z = |c| table.value(r, c).is_zero();
        let broken = match (z(i2), z(i3), z(i22)) {
            (true, true, true) => Some("all three vanish"),
            (false, true, true) if !square => Some("n(n-1)/2 is not a square"),
            (true, true, false) if n % 4 >= 2 => Some("n = 2, 3 mod 4"),
            (true, false, true) if n % 3 == 2 => Some("n = 2 mod 3"),
            _ => None,
        };
        if let Some(why) = broken {
            out.push((shape.clone(), why));
        }
    }
    out
}

/// Characters vanishing at `(2), (5), (4,2)` and one of `(4), (3,2), (2^3)`,
/// with `rho((3))` and the forced value `1/((n-2)(n-5))`.
pub fn forced_three_cycle_witnesses(table: &CharTable) -> Vec<(YoungDiagram, BigRational)> {
    let n = table.n();
    if n < 6 {
        return Vec::new();
    }
    let idx = |s: &str| table.class_index(&s.parse().expect("class literal")).expect("class");
    let must = [idx("2"), idx("5"), idx("4,2")];
    let one_of = [idx("4"), idx("3,2"), idx("2^3")];
    let i3 = idx("3");
    (0..table.characters().len())
        .filter(|&r| must.iter().all(|&c| table.value(r, c).is_zero()))
        .filter(|&r| one_of.iter().any(|&c| table.value(r, c).is_zero()))
        .map(|r| (table.characters()[r].clone(), table.ratio(r, i3)))
        .collect()
}

/// The two-hook family `(a+b, 2+c, 2^d, 1^(a-d-2+e))` of size `2a+b+c+d+e`.
pub fn two_hooks_shape(a: u32, b: u32, c: u32, d: u32, e: u32) -> Result<YoungDiagram> {
    if a + e < d + 2 || a + b < 2 + c {
        return Err(Error::Domain(alloc::format!("({a},{b},{c},{d},{e}) is not a partition")));
    }
    let mut rows = alloc::vec![a + b, 2 + c];
    rows.extend(core::iter::repeat_n(2, d as usize));
    rows.extend(core::iter::repeat_n(1, (a + e - d - 2) as usize));
    YoungDiagram::new(&rows)
}

/// Rows `a_i k + b_i` over decreasing `a_i > 0`.
pub fn rows_shape(k: u32, a: &[u32], b: &[u32]) -> Result<YoungDiagram> {
    if a.len() != b.len() || a.is_empty() || a.windows(2).any(|w| w[0] <= w[1]) || a[a.len() - 1] == 0 {
        return Err(Error::Domain(alloc::format!("bad row parameters {a:?} {b:?}")));
    }
    let rows: Vec<u32> = a.iter().zip(b).map(|(&ai, &bi)| ai * k + bi).collect();
    if rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Domain(alloc::format!("rows {rows:?} are not decreasing")));
    }
    YoungDiagram::new(&rows)
}

/// Rows `a_i k + b_i` and first columns `a_i k + c_i`, `i = 1..r`.
pub fn rows_cols_shape(k: u32, a: &[u32], b: &[u32], c: &[u32]) -> Result<YoungDiagram> {
    let r = a.len();
    if r == 0 || b.len() != r || c.len() != r || a.windows(2).any(|w| w[0] <= w[1]) || a[r - 1] == 0 {
        return Err(Error::Domain(alloc::format!("bad parameters {a:?} {b:?} {c:?}")));
    }
    let bad = || Error::Domain(alloc::format!("parameters {a:?} {b:?} {c:?} at k={k} give no partition"));
    let ri = r as i64;
    let mut rows: Vec<u32> = a.iter().zip(b).map(|(&ai, &bi)| ai * k + bi).collect();
    // column j (1-based) has length a_j k + c_j; rows beyond r have length #{j : col_j > row index}
    let cols: Vec<i64> = a.iter().zip(c).map(|(&ai, &ci)| i64::from(ai * k + ci)).collect();
    for j in (1..=r).rev() {
        let upper = if j == r { ri } else { cols[j] };
        let count = cols[j - 1] - upper;
        if count < 0 {
            return Err(bad());
        }
        rows.extend(core::iter::repeat_n(j as u32, count as usize));
    }
    if rows.windows(2).any(|w| w[0] < w[1]) || rows[r - 1] < r as u32 {
        return Err(bad());
    }
    YoungDiagram::new(&rows)
}

/// A member of one of the hook-like families with a closed formula for a
/// central character value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `omega((2))` on the two-hook family.
    TwoHooks2 { a: u32, b: u32, c: u32, d: u32, e: u32 },
    /// `omega((3))` on the two-hook family.
    TwoHooks3 { a: u32, b: u32, c: u32, d: u32, e: u32 },
    /// `omega((2))` on partitions with rows `a_i k + b_i`.
    TwoRows { k: u32, a: Vec<u32>, b: Vec<u32> },
    /// `omega((2))` with rows `a_i k + b_i` and columns `a_i k + c_i`.
    TwoRowsCols { k: u32, a: Vec<u32>, b: Vec<u32>, c: Vec<u32> },
}

impl Family {
    pub fn shape(&self) -> Result<YoungDiagram> {
        match self {
            Family::TwoHooks2 { a, b, c, d, e } | Family::TwoHooks3 { a, b, c, d, e } => {
                two_hooks_shape(*a, *b, *c, *d, *e)
            }
            Family::TwoRows { k, a, b } => rows_shape(*k, a, b),
            Family::TwoRowsCols { k, a, b, c } => rows_cols_shape(*k, a, b, c),
        }
    }

    pub fn class(&self) -> Partition {
        match self {
            Family::TwoHooks3 { .. } => Partition::cycle(3),
            _ => Partition::cycle(2),
        }
    }

    /// The scale parameter that must be large.
    pub fn scale(&self) -> u32 {
        match self {
            Family::TwoHooks2 { a, .. } | Family::TwoHooks3 { a, .. } => *a,
            Family::TwoRows { k, .. } | Family::TwoRowsCols { k, .. } => *k,
        }
    }

    /// Smallest scale accepted by default. Two-row shapes get 8 so that
    /// several members fit under `n = 27`.
    pub fn default_threshold(&self) -> u32 {
        match self {
            Family::TwoRows { .. } => 8,
            _ => 10,
        }
    }

    /// The closed formula for `omega(class)`.
    pub fn formula(&self) -> Result<BigRational> {
        let n = rat(i64::from(self.shape()?.n()));
        let half = BigRational::new(1.into(), 2.into());
        let q = |x: i64, y: i64| BigRational::new(x.into(), y.into());
        match self {
            Family::TwoHooks2 { b, c, d, e, .. } => {
                let (b, c, d, e) = (i64::from(*b), i64::from(*c), i64::from(*d), i64::from(*e));
                Ok(rat(b - e) * &half * &n + q((c + d + 1) * (-b + c - d + e), 2))
            }
            Family::TwoHooks3 { b, c, d, e, .. } => {
                let (b, c, d, e) = (i64::from(*b), i64::from(*c), i64::from(*d), i64::from(*e));
                let n2 = &n * &n;
                let n3 = &n2 * &n;
                Ok(n3 / rat(12) - q(c + d + 3, 4) * n2
                    + (q((b - e).pow(2) + (c + d + 1).pow(2), 4) + q(5, 12)) * &n
                    - q((c + d + 1) * (b - c + d - e) * (b + c - d - e), 4))
            }
            Family::TwoRows { a, b, .. } => {
                let a: Vec<i64> = a.iter().map(|&x| i64::from(x)).collect();
                let b: Vec<i64> = b.iter().map(|&x| i64::from(x)).collect();
                let odd = |i: usize| 2 * i as i64 + 1;
                let aa: i64 = a.iter().sum();
                let bb: i64 = b.iter().sum();
                let cc: i64 = a.iter().map(|x| x * x).sum();
                let dd: i64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
                let ee: i64 = a.iter().enumerate().map(|(i, x)| odd(i) * x).sum();
                let ff: i64 = b.iter().enumerate().map(|(i, y)| odd(i) * y).sum();
                let gg: i64 = b.iter().map(|y| y * y).sum();
                let a2 = aa * aa;
                Ok(q(cc, 2 * a2) * &n * &n
                    + (q(2 * dd - ee, 2 * aa) - q(bb * cc, a2)) * &n
                    + q(cc * bb * bb - aa * (2 * dd - ee) * bb + a2 * (gg - ff), 2 * a2))
            }
            Family::TwoRowsCols { k, a, b, c } => {
                let r = a.len() as i64;
                let k = i64::from(*k);
                let (mut aa, mut bb, mut dd, mut ee, mut sum_bc) = (0i64, 0i64, 0i64, 0i64, 0i64);
                for i in 0..a.len() {
                    let (ai, bi, ci) = (i64::from(a[i]), i64::from(b[i]), i64::from(c[i]));
                    aa += ai;
                    bb += ai * (bi - ci);
                    dd += (2 * i as i64 + 1) * (bi - ci);
                    ee += bi * bi - ci * ci;
                    sum_bc += bi + ci;
                }
                let ff = sum_bc - r * r;
                debug_assert_eq!(n, rat(2 * aa * k + ff));
                Ok(q(bb, 2 * aa) * &n + q(ee - dd, 2) - q(bb * ff, 2 * aa))
            }
        }
    }
}

/// The closed formula next to the oracle value for one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub shape: YoungDiagram,
    pub class: Partition,
    pub formula: BigRational,
    pub oracle: BigRational,
}

impl FamilyCheck {
    pub fn agrees(&self) -> bool {
        self.formula == self.oracle
    }
}

/// Evaluates the family formula and the oracle's `omega`, refusing scale
/// parameters below `threshold` and sizes above `max_n`.
pub fn family_ratio(oracle: &mut MnOracle, family: &Family, threshold: u32, max_n: u32) -> Result<FamilyCheck> {
    if family.scale() < threshold {
        return Err(Error::Domain(alloc::format!(
            "scale parameter {} below the threshold {threshold}",
            family.scale()
        )));
    }
    let shape = family.shape()?;
    if shape.n() > max_n {
        return Err(Error::ResourceGuard(alloc::format!(
            "n={} exceeds the configured maximum {max_n}",
            shape.n()
        )));
    }
    let class = family.class();
    let formula = family.formula()?;
    let oracle_value = oracle.omega(&shape, &class)?;
    Ok(FamilyCheck {
        shape,
        class,
        formula,
        oracle: oracle_value,
    })
}
