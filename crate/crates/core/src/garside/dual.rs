use super::{GarsideStructure, NormalForm};
use crate::braid::{small_delta_word, BraidWord};
use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// The dual (Birman–Ko–Lee) structure with Garside element `δ = σ1σ2⋯σ_{n-1}`.
///
/// A simple element is a non-crossing partition; its permutation sends each
/// block element to the previous element of its block (cyclically), which is
/// the permutation of `δ` for the one-block partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dual {
    n: usize,
    delta: Permutation,
}

impl Dual {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "need at least one strand");
        Dual { n, delta: perm_from_blocks(n, &[(1..=n).collect()]) }
    }
}

/// A band generator `a_{t,s}` (1 ≤ s < t ≤ n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandGenerator {
    pub t: usize,
    pub s: usize,
}

/// Word of `a_{t,s} = σ_{t-1}^{-1}⋯σ_{s+1}^{-1} σ_s σ_{s+1}⋯σ_{t-1}`.
pub fn band_word(n: usize, band: BandGenerator) -> Result<BraidWord> {
    let BandGenerator { t, s } = band;
    if s == 0 || s >= t || t > n {
        return Err(BraidError::IndexOutOfRange(format!("band a_({t},{s}) in B{n}")));
    }
    Ok(BraidWord::from_raw(n, band_letters(t, s)))
}

fn band_letters(t: usize, s: usize) -> Vec<i32> {
    let mut out: Vec<i32> = ((s + 1)..t).rev().map(|j| -(j as i32)).collect();
    out.push(s as i32);
    out.extend(((s + 1)..t).map(|j| j as i32));
    out
}

/// Permutation of the dual simple with the given blocks (1-based).
pub(crate) fn perm_from_blocks(n: usize, blocks: &[Vec<usize>]) -> Permutation {
    let mut img: Vec<usize> = (0..n).collect();
    for b in blocks {
        let mut b = b.clone();
        b.sort_unstable();
        for j in 0..b.len() {
            let prev = if j == 0 { b[b.len() - 1] } else { b[j - 1] };
            img[b[j] - 1] = prev - 1;
        }
    }
    Permutation::from_images(&img).expect("blocks partition the points")
}

/// Block label per point (0-based points) of a permutation's cycles.
fn labels(x: &Permutation) -> Vec<usize> {
    let mut lab = vec![0; x.n()];
    for (c, cyc) in x.cycles().iter().enumerate() {
        for &p in cyc {
            lab[p] = c;
        }
    }
    lab
}

fn perm_from_labels(lab: &[usize]) -> Permutation {
    let n = lab.len();
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (p, &l) in lab.iter().enumerate() {
        groups.entry(l).or_default().push(p + 1);
    }
    let blocks: Vec<Vec<usize>> = groups.into_values().collect();
    perm_from_blocks(n, &blocks)
}

fn crossing(a: &[usize], b: &[usize]) -> bool {
    // a, b sorted, disjoint
    for (i, &x) in a.iter().enumerate() {
        for &z in &a[i + 1..] {
            let inside = b.iter().filter(|&&y| x < y && y < z).count();
            if inside > 0 && inside < b.len() {
                return true;
            }
        }
    }
    false
}

impl GarsideStructure for Dual {
    fn n(&self) -> usize {
        self.n
    }

    fn delta_perm(&self) -> &Permutation {
        &self.delta
    }

    fn delta_word(&self) -> BraidWord {
        if self.n == 1 {
            return BraidWord::identity(1);
        }
        small_delta_word(self.n).expect("n >= 2")
    }

    fn delta_conj_order(&self) -> i64 {
        self.n as i64
    }

    fn gcd(&self, a: &Permutation, b: &Permutation) -> Permutation {
        let la = labels(a);
        let lb = labels(b);
        let lab: Vec<usize> = la.iter().zip(&lb).map(|(&x, &y)| x * self.n + y).collect();
        perm_from_labels(&lab)
    }

    fn lcm(&self, a: &Permutation, b: &Permutation) -> Permutation {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for x in [a, b] {
            for i in 0..n {
                let (u, v) = (find(&mut parent, i), find(&mut parent, x.apply(i)));
                parent[u] = v;
            }
        }
        loop {
            let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for i in 0..n {
                let r = find(&mut parent, i);
                blocks.entry(r).or_default().push(i);
            }
            let bl: Vec<(usize, Vec<usize>)> = blocks.into_iter().collect();
            let mut merged = false;
            'scan: for i in 0..bl.len() {
                for j in i + 1..bl.len() {
                    if crossing(&bl[i].1, &bl[j].1) {
                        parent[bl[i].0] = bl[j].0;
                        merged = true;
                        break 'scan;
                    }
                }
            }
            if !merged {
                let lab: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
                return perm_from_labels(&lab);
            }
        }
    }

    fn atoms(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for t in 2..=self.n {
            for s in 1..t {
                out.push(perm_from_blocks(self.n, &[vec![s, t]]));
            }
        }
        out
    }

    fn simple_letters(&self, x: &Permutation) -> Vec<i32> {
        let mut out = Vec::new();
        for b in BklSimple::from_perm(x).blocks {
            for pair in b.windows(2) {
                out.extend(band_letters(pair[1], pair[0]));
            }
        }
        out
    }

    fn is_simple(&self, x: &Permutation) -> bool {
        if x.n() != self.n {
            return false;
        }
        let s = BklSimple::from_perm(x);
        if perm_from_blocks(self.n, &s.blocks) != *x {
            return false;
        }
        for i in 0..s.blocks.len() {
            for j in i + 1..s.blocks.len() {
                if crossing(&s.blocks[i], &s.blocks[j]) {
                    return false;
                }
            }
        }
        true
    }

    fn sigma(&self, i: usize) -> Permutation {
        Permutation::adjacent(self.n, i - 1)
    }
}

/// A dual simple element as a non-crossing partition of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct BklSimple {
    pub n: usize,
    /// Blocks sorted internally and by first element; singletons included.
    pub blocks: Vec<Vec<usize>>,
}

impl BklSimple {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            for &p in b {
                if p == 0 || p > n || seen[p] {
                    return Err(BraidError::IndexOutOfRange(format!("point {p} in partition of {n}")));
                }
                seen[p] = true;
            }
        }
        let mut blocks = blocks;
        for p in 1..=n {
            if !seen[p] {
                blocks.push(vec![p]);
            }
        }
        let s = Self::from_perm(&perm_from_blocks(n, &blocks));
        if !Dual::new(n).is_simple(&s.to_perm()) {
            return Err(BraidError::NotApplicable("blocks cross".into()));
        }
        Ok(s)
    }

    pub fn from_perm(x: &Permutation) -> Self {
        let mut blocks: Vec<Vec<usize>> = x
            .cycles()
            .into_iter()
            .map(|c| {
                let mut b: Vec<usize> = c.into_iter().map(|p| p + 1).collect();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        BklSimple { n: x.n(), blocks }
    }

    pub fn to_perm(&self) -> Permutation {
        perm_from_blocks(self.n, &self.blocks)
    }

    /// Blocks with at least two points.
    pub fn nontrivial_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1).cloned().collect()
    }
}

/// Every block shifted by `k` (mod n); equals `δ^{k} x δ^{-k}` in this letter convention.
pub fn rotate_simple(x: &BklSimple, k: i64) -> BklSimple {
    let n = x.n as i64;
    let blocks: Vec<Vec<usize>> = x
        .blocks
        .iter()
        .map(|b| b.iter().map(|&p| ((p as i64 - 1 + k).rem_euclid(n) + 1) as usize).collect())
        .collect();
    BklSimple::from_perm(&perm_from_blocks(x.n, &blocks))
}

pub type BklNormalForm = NormalForm<Dual>;

pub fn bkl_normal_form(w: &BraidWord) -> BklNormalForm {
    NormalForm::from_word(Dual::new(w.n()), w)
}

/// Whether every factor is invariant under rotation by `k`.
pub fn is_rotation_symmetric(nf: &BklNormalForm, k: i64) -> bool {
    nf.factors().iter().all(|f| {
        let s = BklSimple::from_perm(f);
        rotate_simple(&s, k) == s
    })
}

impl BklNormalForm {
    pub fn simples(&self) -> Vec<BklSimple> {
        self.factors().iter().map(BklSimple::from_perm).collect()
    }
}

impl Serialize for NormalForm<Dual> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BklNormalForm", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("inf", &self.inf())?;
        let blocks: Vec<Vec<Vec<usize>>> = self.simples().into_iter().map(|s| s.nontrivial_blocks()).collect();
        st.serialize_field("factors", &blocks)?;
        st.end()
    }
}
