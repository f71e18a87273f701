use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A bijection of `{0..n-1}`; `images[i]` is where the strand starting at
/// position `i` ends. Printed and serialized 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 256, "at most 256 points supported");
        Permutation { images: (0..n).map(|i| i as u8).collect() }
    }

    /// The order-reversing permutation (the permutation of Δ).
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (0..n).rev().map(|i| i as u8).collect() }
    }

    /// The transposition of `i` and `i+1` (0-based).
    pub fn adjacent(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    /// Builds from 0-based images; `None` if not a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    /// Builds from 1-based images; `None` if not a bijection.
    pub fn from_one_based(images: &[usize]) -> Option<Self> {
        if images.contains(&0) {
            return None;
        }
        let zero: Vec<usize> = images.iter().map(|&x| x - 1).collect();
        Self::from_images(&zero)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [u8] {
        &mut self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.n(), other.n());
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    /// Cycles in increasing order of their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Sorted multiset of cycle lengths, a conjugacy invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Number of pairs `i < j` with `self(i) > self(j)`.
    pub fn inversions(&self) -> usize {
        let im = &self.images;
        (0..im.len()).map(|i| (i + 1..im.len()).filter(|&j| im[i] > im[j]).count()).sum()
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        self.cycles().iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).ok_or_else(|| serde::de::Error::custom("not a permutation"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn then_applies_left_first() {
        let a = Permutation::adjacent(3, 0);
        let b = Permutation::adjacent(3, 1);
        // strand 0 -> 1 -> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).inverse().then(&a.then(&b)), Permutation::identity(3));
    }

    #[test]
    fn cycles_and_order() {
        let p = Permutation::from_one_based(&[2, 3, 1, 5, 4]).unwrap();
        assert_eq!(p.cycle_type(), vec![2, 3]);
        assert_eq!(p.order(), 6);
        assert_eq!(p.pow(6), Permutation::identity(5));
        assert!(Permutation::from_one_based(&[1, 1]).is_none());
    }
}
