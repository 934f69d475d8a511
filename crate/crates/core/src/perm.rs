//! Explicit permutations of `{0, .., n-1}` for brute-force cross-checks.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: u32) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| Error::Input("image out of range".into()))?;
            if *slot {
                return Err(Error::Input("repeated image".into()));
            }
            *slot = true;
        }
        Ok(Perm { images })
    }

    /// Disjoint cycles given as lists of points; unlisted points are fixed.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::Input("point out of range".into()));
                }
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    /// Canonical element of a class: cycles on consecutive points, largest first.
    pub fn canonical(class: &Partition, n: u32) -> Result<Self> {
        let full = class.padded(n)?;
        let mut images = Vec::with_capacity(n as usize);
        let mut start = 0u32;
        for len in full {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = alloc::vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_parts(&parts)
    }
}

/// Calls `f` on every element of `class` in `S_n`, each exactly once.
pub fn for_each_in_class<F: FnMut(&Perm)>(class: &Partition, n: u32, mut f: F) -> Result<()> {
    let full = class.padded(n)?;
    let mut lengths: Vec<(u32, u32)> = Vec::new();
    for p in full {
        match lengths.iter_mut().find(|(l, _)| *l == p) {
            Some(slot) => slot.1 += 1,
            None => lengths.push((p, 1)),
        }
    }
    let mut images = alloc::vec![u32::MAX; n as usize];
    let mut used = alloc::vec![false; n as usize];
    fill(&mut lengths, &mut images, &mut used, &mut f);
    Ok(())
}

fn fill<F: FnMut(&Perm)>(lengths: &mut [(u32, u32)], images: &mut [u32], used: &mut [bool], f: &mut F) {
    let Some(start) = used.iter().position(|u| !u) else {
        f(&Perm {
            images: images.to_vec(),
        });
        return;
    };
    used[start] = true;
    for k in 0..lengths.len() {
        if lengths[k].1 == 0 {
            continue;
        }
        lengths[k].1 -= 1;
        let len = lengths[k].0;
        let mut cycle = alloc::vec![start as u32];
        extend_cycle(len, &mut cycle, lengths, images, used, f);
        lengths[k].1 += 1;
    }
    used[start] = false;
}

fn extend_cycle<F: FnMut(&Perm)>(
    len: u32,
    cycle: &mut Vec<u32>,
    lengths: &mut [(u32, u32)],
    images: &mut [u32],
    used: &mut [bool],
    f: &mut F,
) {
    if cycle.len() as u32 == len {
        for (i, &a) in cycle.iter().enumerate() {
            images[a as usize] = cycle[(i + 1) % cycle.len()];
        }
        fill(lengths, images, used, f);
        return;
    }
    for p in 0..used.len() {
        if used[p] {
            continue;
        }
        used[p] = true;
        cycle.push(p as u32);
        extend_cycle(len, cycle, lengths, images, used, f);
        cycle.pop();
        used[p] = false;
    }
}

/// Every element of `S_n`, via all class enumerations.
pub fn for_each_perm<F: FnMut(&Perm)>(n: u32, mut f: F) {
    for class in crate::partition::partitions_of(n) {
        for_each_in_class(&class, n, &mut f).expect("class fits in S_n");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;
    use alloc::collections::BTreeSet;

    #[test]
    fn class_enumeration_is_exact() {
        for n in 1..=6u32 {
            for class in crate::partition::partitions_of(n) {
                let mut seen = BTreeSet::new();
                for_each_in_class(&class, n, |p| {
                    assert_eq!(p.cycle_type(), class);
                    assert!(seen.insert(p.images.clone()));
                })
                .unwrap();
                assert_eq!(num_bigint::BigInt::from(seen.len()), class.class_size(n).unwrap());
            }
        }
        let mut count = 0u32;
        for_each_perm(5, |_| count += 1);
        assert_eq!(num_bigint::BigInt::from(count), factorial(5));
    }

    #[test]
    fn composition() {
        let a = Perm::from_cycles(3, &[alloc::vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[alloc::vec![1, 2]]).unwrap();
        assert_eq!(a.compose(&b).cycle_type(), Partition::cycle(3));
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
        let c = Perm::canonical(&"3,2".parse().unwrap(), 6).unwrap();
        assert_eq!(c.cycle_type(), "3,2".parse().unwrap());
        assert_eq!(c.apply(2), 0);
    }
}
