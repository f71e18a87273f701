//! Garside structures on `B_n` and the generic left-greedy normal form.
//!
//! Simple elements of both the classical and the dual structure are stored
//! as permutations: a simple element is determined by its permutation.

mod artin;
mod dual;

pub use artin::{commutes, nf_equal, normal_form, Artin, GarsideNormalForm};
pub use dual::{
    band_word, bkl_normal_form, is_rotation_symmetric, rotate_simple, BandGenerator, BklNormalForm, BklSimple,
    Dual,
};

use crate::braid::BraidWord;
use crate::perm::Permutation;
use std::fmt::Debug;
use std::hash::Hash;

/// The lattice operations a Garside structure must provide on its simples.
pub trait GarsideStructure: Clone + Debug + PartialEq + Eq + Hash + Send + Sync {
    fn n(&self) -> usize;
    /// Permutation of the Garside element.
    fn delta_perm(&self) -> &Permutation;
    /// Word for the Garside element.
    fn delta_word(&self) -> BraidWord;
    /// Order of conjugation by the Garside element acting on simples.
    fn delta_conj_order(&self) -> i64;
    /// Greatest common left divisor.
    fn gcd(&self, a: &Permutation, b: &Permutation) -> Permutation;
    /// Least common left multiple.
    fn lcm(&self, a: &Permutation, b: &Permutation) -> Permutation;
    /// The atoms of the structure.
    fn atoms(&self) -> Vec<Permutation>;
    /// A positive word for a simple element.
    fn simple_letters(&self, x: &Permutation) -> Vec<i32>;
    /// Whether `x` is the permutation of a simple element.
    fn is_simple(&self, x: &Permutation) -> bool;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.n())
    }

    /// `Δ^{-k} x Δ^{k}`.
    fn conj_delta(&self, x: &Permutation, k: i64) -> Permutation {
        let k = k.rem_euclid(self.delta_conj_order());
        if k == 0 {
            return x.clone();
        }
        let d = self.delta_perm().pow(k);
        d.inverse().then(x).then(&d)
    }

    /// Right complement `a^{-1} Δ`.
    fn complement(&self, a: &Permutation) -> Permutation {
        a.inverse().then(self.delta_perm())
    }

    /// Left complement `Δ a^{-1}`.
    fn left_complement(&self, a: &Permutation) -> Permutation {
        self.delta_perm().then(&a.inverse())
    }

    fn left_divides(&self, a: &Permutation, b: &Permutation) -> bool {
        &self.gcd(a, b) == a
    }

    fn is_delta(&self, x: &Permutation) -> bool {
        x == self.delta_perm()
    }

    /// The simple `σ_i` (1-based) as a permutation.
    fn sigma(&self, i: usize) -> Permutation {
        Permutation::adjacent(self.n(), i - 1)
    }
}

/// `Δ^inf F_1 ⋯ F_k` with the factors left-weighted and none trivial or `Δ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm<G: GarsideStructure> {
    g: G,
    inf: i64,
    factors: Vec<Permutation>,
}

impl<G: GarsideStructure> PartialOrd for NormalForm<G> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<G: GarsideStructure> Ord for NormalForm<G> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.inf, &self.factors).cmp(&(other.inf, &other.factors))
    }
}

/// Makes `(a, b)` left-weighted, returning whether anything changed.
fn left_weight<G: GarsideStructure>(g: &G, a: &mut Permutation, b: &mut Permutation) -> bool {
    let x = g.gcd(&g.complement(a), b);
    if x.is_identity() {
        return false;
    }
    *a = a.then(&x);
    *b = x.inverse().then(b);
    true
}

impl<G: GarsideStructure> NormalForm<G> {
    /// Normalizes `Δ^inf · s_1 ⋯ s_k` for arbitrary simples `s_i`.
    pub fn from_simples(g: G, mut inf: i64, simples: impl IntoIterator<Item = Permutation>) -> Self {
        let mut fs: Vec<Permutation> = Vec::new();
        for s in simples {
            if s.is_identity() {
                continue;
            }
            fs.push(s);
            let mut idx = fs.len() - 1;
            while idx > 0 {
                let (l, r) = fs.split_at_mut(idx);
                if !left_weight(&g, &mut l[idx - 1], &mut r[0]) {
                    break;
                }
                idx -= 1;
            }
            let lead = fs.iter().take_while(|f| g.is_delta(f)).count();
            if lead > 0 {
                inf += lead as i64;
                fs.drain(..lead);
            }
            while fs.last().is_some_and(Permutation::is_identity) {
                fs.pop();
            }
        }
        debug_assert!(fs.windows(2).all(|w| g.gcd(&g.complement(&w[0]), &w[1]).is_identity()));
        NormalForm { g, inf, factors: fs }
    }

    pub fn from_word(g: G, w: &BraidWord) -> Self {
        assert_eq!(g.n(), w.n(), "structure and word have different strand counts");
        let delta = g.delta_perm().clone();
        let total_neg = w.letters().iter().filter(|&&e| e < 0).count() as i64;
        let mut seen = 0i64;
        let mut raw: Vec<(Permutation, i64)> = Vec::with_capacity(w.len());
        for &e in w.letters() {
            let s = g.sigma(e.unsigned_abs() as usize);
            if e > 0 {
                raw.push((s, seen));
            } else {
                seen += 1;
                raw.push((delta.then(&s), seen));
            }
        }
        let simples = raw.into_iter().map(|(s, c)| g.conj_delta(&s, -(total_neg - c)));
        Self::from_simples(g.clone(), -total_neg, simples)
    }

    pub fn identity(g: G) -> Self {
        NormalForm { g, inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(g: G, k: i64) -> Self {
        NormalForm { g, inf: k, factors: Vec::new() }
    }

    pub fn structure(&self) -> &G {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn to_word(&self) -> BraidWord {
        let n = self.n();
        let mut letters = Vec::new();
        let d = self.g.delta_word();
        let dl = if self.inf >= 0 { d.letters().to_vec() } else { d.invert().letters().to_vec() };
        for _ in 0..self.inf.unsigned_abs() {
            letters.extend_from_slice(&dl);
        }
        for f in &self.factors {
            letters.extend(self.g.simple_letters(f));
        }
        BraidWord::from_raw(n, letters)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let q = other.inf;
        let simples = self
            .factors
            .iter()
            .map(|a| self.g.conj_delta(a, q))
            .chain(other.factors.iter().cloned())
            .collect::<Vec<_>>();
        Self::from_simples(self.g.clone(), self.inf + q, simples)
    }

    pub fn inverse(&self) -> Self {
        let p = self.inf;
        let k = self.factors.len() as i64;
        let simples: Vec<Permutation> = self
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(j, a)| self.g.conj_delta(&self.g.complement(a), -(j as i64 + 1 + p)))
            .collect();
        Self::from_simples(self.g.clone(), -k - p, simples)
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.g.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// `s^{-1} · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: &Permutation) -> Self {
        let head = self.g.conj_delta(&self.g.complement(s), self.inf - 1);
        let simples: Vec<Permutation> =
            std::iter::once(head).chain(self.factors.iter().cloned()).chain(std::iter::once(s.clone())).collect();
        Self::from_simples(self.g.clone(), self.inf - 1, simples)
    }

    /// `c^{-1} · self · c`.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.inverse().multiply(self).multiply(c)
    }

    /// Whether the factor pairs are all left-weighted (always true for values built here).
    pub fn is_left_weighted(&self) -> bool {
        self.factors.windows(2).all(|w| self.g.gcd(&self.g.complement(&w[0]), &w[1]).is_identity())
            && self.factors.iter().all(|f| !f.is_identity() && !self.g.is_delta(f))
    }

    /// Left multiplication by `Δ^k`.
    pub fn shift_inf(&self, k: i64) -> Self {
        NormalForm { g: self.g.clone(), inf: self.inf + k, factors: self.factors.clone() }
    }
}
