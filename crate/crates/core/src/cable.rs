use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use serde::{Deserialize, Serialize};

/// Tube sizes indexed by the tube's starting position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CablePattern {
    pub sizes: Vec<usize>,
}

impl CablePattern {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(BraidError::SizeMismatch("tube sizes must be positive".into()));
        }
        Ok(CablePattern { sizes })
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// First strand (0-based) of each tube slot.
    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.sizes)
    }
}

pub(crate) fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|&s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Positive word moving a ribbon of `a` strands across a ribbon of `b` strands
/// to its right; ribbons start at strand `s` (0-based).
fn block_swap(a: usize, b: usize, s: usize, out: &mut Vec<i32>) {
    for j in (0..a).rev() {
        for l in 0..b {
            out.push((s + j + l + 1) as i32);
        }
    }
}

/// Tube sizes at the bottom of `tubular` given sizes at the top.
pub fn arrival_sizes(tubular: &BraidWord, pattern: &CablePattern) -> Vec<usize> {
    let mut cur = pattern.sizes.clone();
    for &e in tubular.letters() {
        let i = e.unsigned_abs() as usize - 1;
        cur.swap(i, i + 1);
    }
    cur
}

/// Replaces each strand of `tubular` by a ribbon of parallel strands, then
/// appends `interiors[j]` on the ribbon ending at position `j`.
pub fn cable(tubular: &BraidWord, pattern: &CablePattern, interiors: &[BraidWord]) -> Result<BraidWord> {
    let m = tubular.n();
    if pattern.sizes.len() != m {
        return Err(BraidError::SizeMismatch(format!(
            "pattern has {} tubes, tubular braid has {m} strands",
            pattern.sizes.len()
        )));
    }
    if interiors.len() != m {
        return Err(BraidError::SizeMismatch(format!("expected {m} interiors, got {}", interiors.len())));
    }
    let n = pattern.total();
    let mut cur = pattern.sizes.clone();
    let mut letters = Vec::new();
    for &e in tubular.letters() {
        let i = e.unsigned_abs() as usize - 1;
        let s: usize = cur[..i].iter().sum();
        let (a, b) = (cur[i], cur[i + 1]);
        if e > 0 {
            block_swap(a, b, s, &mut letters);
        } else {
            let mut tmp = Vec::with_capacity(a * b);
            block_swap(b, a, s, &mut tmp);
            letters.extend(tmp.iter().rev().map(|&x| -x));
        }
        cur.swap(i, i + 1);
    }
    let offs = offsets(&cur);
    for (j, int) in interiors.iter().enumerate() {
        if int.n() != cur[j] {
            return Err(BraidError::SizeMismatch(format!(
                "interior at slot {} has {} strands, tube has {}",
                j + 1,
                int.n(),
                cur[j]
            )));
        }
        letters.extend(int.shifted(offs[j], n).letters());
    }
    Ok(BraidWord::from_raw(n, letters))
}

/// Cabling with all interiors trivial.
pub fn cable_trivial(tubular: &BraidWord, pattern: &CablePattern) -> Result<BraidWord> {
    let fin = arrival_sizes(tubular, pattern);
    let ints: Vec<BraidWord> = fin.iter().map(|&s| BraidWord::identity(s)).collect();
    cable(tubular, pattern, &ints)
}
