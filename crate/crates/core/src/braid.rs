use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A word in the Artin generators of `B_n`. Letter `e > 0` is `σ_e`,
/// `e < 0` is `σ_{|e|}^{-1}`; words are read left to right, top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(BraidError::BadStrandCount(n));
        }
        for &e in &letters {
            if e == 0 || e.unsigned_abs() as usize >= n {
                return Err(BraidError::LetterOutOfRange { letter: e, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Construction for letters already known to be in range.
    pub(crate) fn from_raw(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&e| e != 0 && (e.unsigned_abs() as usize) < n));
        BraidWord { n, letters }
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn sigma(n: usize, i: i32) -> Result<Self> {
        Self::new(n, vec![i])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.n != other.n {
            Err(BraidError::StrandMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    /// Concatenation; panics on strand mismatch (use `check_same` first for user input).
    pub fn mul(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "strand mismatch in product");
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        BraidWord { n: self.n, letters }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `c^{-1} self c`.
    pub fn conjugate_by(&self, c: &BraidWord) -> BraidWord {
        c.invert().mul(self).mul(c)
    }

    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|&e| -e).collect() }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (0..self.n).collect(); // pos[strand] = current position
        let mut at: Vec<usize> = (0..self.n).collect(); // at[position] = strand
        for &e in &self.letters {
            let j = e.unsigned_abs() as usize - 1;
            let (a, b) = (at[j], at[j + 1]);
            at.swap(j, j + 1);
            pos[a] = j + 1;
            pos[b] = j;
        }
        Permutation::from_images(&pos).expect("braid permutation is a bijection")
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Deletes the strand starting (and ending) at 1-based position `i`.
    pub fn forget_strand(&self, i: usize) -> Result<BraidWord> {
        if i == 0 || i > self.n || self.n < 2 {
            return Err(BraidError::IndexOutOfRange(format!("strand {i} of {}", self.n)));
        }
        if self.permutation().apply(i - 1) != i - 1 {
            return Err(BraidError::PermutationMovesStrand(i));
        }
        let mut pos = i - 1;
        let mut out = Vec::with_capacity(self.len());
        for &e in &self.letters {
            let j = e.unsigned_abs() as usize - 1;
            if j == pos {
                pos = j + 1;
            } else if j + 1 == pos {
                pos = j;
            } else if j + 1 < pos {
                out.push(e);
            } else {
                out.push(e.signum() * (j as i32));
            }
        }
        Ok(BraidWord { n: self.n - 1, letters: out })
    }

    /// The same word acting on strands `offset+1..offset+n` of `B_total`.
    pub fn shifted(&self, offset: usize, total: usize) -> BraidWord {
        assert!(offset + self.n <= total, "shift out of range");
        let o = offset as i32;
        BraidWord { n: total, letters: self.letters.iter().map(|&e| e + e.signum() * o).collect() }
    }

    /// Parses `Bn: e1 e2 ...`.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let lead = text.len() - text.trim_start().len();
        let t = text.trim();
        let perr = |pos: usize, msg: &str| BraidError::Parse { pos: pos + 1, msg: msg.to_string() };
        let rest = t
            .strip_prefix('B')
            .or_else(|| t.strip_prefix('b'))
            .ok_or_else(|| perr(lead, "expected `B<n>:`"))?;
        let colon = rest.find(':').ok_or_else(|| perr(lead + 1, "expected `:` after strand count"))?;
        let n: usize = rest[..colon]
            .trim()
            .parse()
            .map_err(|_| perr(lead + 1, "strand count is not a positive integer"))?;
        if n == 0 {
            return Err(perr(lead + 1, "strand count must be at least 1"));
        }
        let body_start = lead + 1 + colon + 1;
        let body = &rest[colon + 1..];
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
            let here = body_start + offset;
            offset += tok.len() + 1;
            if tok.is_empty() {
                continue;
            }
            let e: i32 = tok.parse().map_err(|_| perr(here, &format!("`{tok}` is not an integer")))?;
            if e == 0 || e.unsigned_abs() as usize >= n {
                return Err(perr(here, &format!("letter {e} out of range for B{n}")));
            }
            letters.push(e);
        }
        Ok(BraidWord { n, letters })
    }
}

impl From<BraidWord> for String {
    fn from(w: BraidWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for BraidWord {
    type Error = BraidError;
    fn try_from(s: String) -> Result<Self> {
        BraidWord::parse(&s)
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;
    fn from_str(s: &str) -> Result<Self> {
        BraidWord::parse(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.n)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Garside's half twist `σ1(σ2σ1)(σ3σ2σ1)⋯`.
pub fn delta_word(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::BadStrandCount(n));
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in 1..n as i32 {
        letters.extend((1..=top).rev());
    }
    Ok(BraidWord { n, letters })
}

/// `δ_(n) = σ1σ2⋯σ_{n-1}`.
pub fn small_delta_word(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::BadStrandCount(n));
    }
    Ok(BraidWord { n, letters: (1..n as i32).collect() })
}

/// `γ_(n) = σ1²σ2⋯σ_{n-1}`; fixes puncture 1.
pub fn gamma_word(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::BadStrandCount(n));
    }
    let mut letters = vec![1];
    letters.extend(1..n as i32);
    Ok(BraidWord { n, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(3, &[1, -1]).free_reduce(), w(3, &[]));
        assert_eq!(w(3, &[]).free_reduce(), w(3, &[]));
        assert_eq!(w(4, &[1, 3, -3, 2]).free_reduce(), w(4, &[1, 2]));
        assert_eq!(w(4, &[2, 1, -1, -2, 3]).free_reduce(), w(4, &[3]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(3, &[1, 2]).invert(), w(3, &[-2, -1]));
        assert_eq!(w(3, &[]).invert(), w(3, &[]));
        assert_eq!(w(4, &[-3, 1]).invert(), w(4, &[-1, 3]));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(delta_word(4).unwrap().pow(2).exponent_sum(), 12);
        assert_eq!(w(4, &[]).exponent_sum(), 0);
        assert_eq!(w(4, &[1, 3, 3]).exponent_sum(), 3);
    }

    #[test]
    fn permutations() {
        assert_eq!(w(2, &[1]).permutation().one_based(), vec![2, 1]);
        assert!(w(2, &[1, 1]).permutation().is_identity());
        let p = small_delta_word(3).unwrap().permutation();
        assert_eq!(p.one_based(), vec![3, 1, 2]);
        let d12 = small_delta_word(12).unwrap().pow(9).permutation();
        assert_eq!(d12.cycle_type(), vec![4, 4, 4]);
    }

    #[test]
    fn forget_strand_examples() {
        let g = gamma_word(3).unwrap();
        assert_eq!(g.forget_strand(1).unwrap(), w(2, &[1]));
        assert_eq!(w(3, &[2]).forget_strand(1).unwrap(), w(2, &[1]));
        assert_eq!(w(3, &[1, 1]).forget_strand(3).unwrap(), w(2, &[1, 1]));
        assert_eq!(w(3, &[1]).forget_strand(1), Err(BraidError::PermutationMovesStrand(1)));
    }

    #[test]
    fn parse_and_display() {
        let b = BraidWord::parse("B5: 3 4 2 3 1 2 2 3 4 1 2 3").unwrap();
        assert_eq!(b.n(), 5);
        assert_eq!(b.len(), 12);
        assert_eq!(BraidWord::parse(&b.to_string()).unwrap(), b);
        assert_eq!(BraidWord::parse("B3:").unwrap(), w(3, &[]));
        assert_eq!(BraidWord::parse("B3: -2 1").unwrap(), w(3, &[-2, 1]));
        match BraidWord::parse("B3: 1 x") {
            Err(BraidError::Parse { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(BraidWord::parse("B3: 3").is_err());
        assert!(BraidWord::parse("3: 1").is_err());
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta_word(2).unwrap(), w(2, &[1]));
        assert_eq!(delta_word(3).unwrap(), w(3, &[1, 2, 1]));
        assert!(delta_word(1).is_err());
        assert_eq!(gamma_word(4).unwrap(), w(4, &[1, 1, 2, 3]));
    }
}
