//! Centralizers of pseudo-Anosov braids: a commuting periodic braid and a root.

use crate::braid::{delta_word, BraidWord};
use crate::classify::PeriodicKind;
use crate::config::Limits;
use crate::error::{BraidError, Result};
use crate::garside::{commutes, is_rotation_symmetric, Artin, Dual, GarsideStructure, NormalForm};
use crate::perm::Permutation;
use crate::sss::{summit_representative, super_summit_set_in};
use itertools::Itertools;

/// A periodic braid commuting with a given braid, as a conjugate of `rep^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingPeriodic {
    pub kind: PeriodicKind,
    pub k: i64,
    pub rho: BraidWord,
}

impl CommutingPeriodic {
    /// Order modulo the center.
    pub fn order(&self, n: usize) -> usize {
        let rotated = match self.kind {
            PeriodicKind::Delta => n,
            PeriodicKind::Gamma => n - 1,
        };
        rotated / self.k as usize
    }
}

fn proper_divisors(x: usize) -> Vec<usize> {
    (1..x).filter(|d| x % d == 0).collect()
}

/// Smallest-`k` periodic braid commuting with `w`, found by scanning the dual super
/// summit set for elements commuting with `δ^k` (all factors `k`-rotation symmetric)
/// or with a rotated `γ^k`.
pub fn pa_commuting_periodic(w: &BraidWord, limits: &Limits) -> Result<Option<CommutingPeriodic>> {
    let n = w.n();
    if n < 3 {
        return Ok(None);
    }
    let sss = super_summit_set_in(Dual::new(n), w, limits)?;
    let mut best: Option<CommutingPeriodic> = None;
    'delta: for k in proper_divisors(n) {
        for e in &sss.elements {
            if is_rotation_symmetric(&e.nf, k as i64) {
                let rho = PeriodicKind::Delta.representative(n, k as i64)?.conjugate_by(&e.conjugator_word().invert());
                best = Some(CommutingPeriodic { kind: PeriodicKind::Delta, k: k as i64, rho });
                break 'delta;
            }
        }
    }
    let delta = PeriodicKind::Delta.base_word(n)?;
    'gamma: for k in proper_divisors(n - 1) {
        if best.as_ref().is_some_and(|b| b.order(n) >= (n - 1) / k) {
            break;
        }
        let g = PeriodicKind::Gamma.representative(n, k as i64)?;
        // conjugates of γ^k fixing each puncture in turn
        let rotated: Vec<BraidWord> = (0..n as i64).map(|j| g.conjugate_by(&delta.pow(j))).collect();
        for e in &sss.elements {
            let s = e.nf.to_word();
            if !s.permutation().images().iter().enumerate().any(|(i, &x)| i == x) {
                continue;
            }
            for r in &rotated {
                if commutes(&s, r)? {
                    let rho = r.conjugate_by(&e.conjugator_word().invert());
                    best = Some(CommutingPeriodic { kind: PeriodicKind::Gamma, k: k as i64, rho });
                    break 'gamma;
                }
            }
        }
    }
    if let Some(b) = &best {
        if !commutes(&b.rho, w)? {
            return Err(BraidError::NotConsistent);
        }
    }
    Ok(best)
}

/// Left-weighted sequences of proper simples with a prescribed total length.
struct RootSearch<'a> {
    g: Artin,
    by_len: Vec<Vec<Permutation>>,
    target: &'a NormalForm<Artin>,
    target_perm: Permutation,
    k: i64,
    visited: usize,
    cap: usize,
}

impl RootSearch<'_> {
    fn dfs(&mut self, inf: i64, chain: &mut Vec<Permutation>, slots: usize, remaining: usize) -> Result<Option<NormalForm<Artin>>> {
        let max_len = self.by_len.len() - 1;
        if slots == 0 {
            if remaining != 0 {
                return Ok(None);
            }
            self.visited += 1;
            if self.visited > self.cap {
                return Err(BraidError::BudgetExceeded { what: "root candidates", cap: self.cap });
            }
            let delta_perm = self.g.delta_perm().pow(inf);
            let perm = chain.iter().fold(delta_perm, |acc, s| acc.then(s));
            if perm.pow(self.k) != self.target_perm {
                return Ok(None);
            }
            let r = NormalForm::from_simples(self.g.clone(), inf, chain.iter().cloned());
            return Ok((r.pow(self.k) == *self.target).then_some(r));
        }
        if remaining < slots || remaining > slots * max_len {
            return Ok(None);
        }
        let lo = remaining.saturating_sub((slots - 1) * max_len).max(1);
        let hi = (remaining - (slots - 1)).min(max_len);
        for len in lo..=hi {
            for i in 0..self.by_len[len].len() {
                let s = self.by_len[len][i].clone();
                if let Some(prev) = chain.last() {
                    if !self.g.gcd(&self.g.complement(prev), &s).is_identity() {
                        continue;
                    }
                }
                self.visited += 1;
                if self.visited > self.cap {
                    return Err(BraidError::BudgetExceeded { what: "root candidates", cap: self.cap });
                }
                chain.push(s);
                let found = self.dfs(inf, chain, slots - 1, remaining - len)?;
                chain.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }
}

/// A braid `c` with `c^k = w`, searched among normal forms of bounded canonical length
/// around a summit conjugate of `w`. `None` means no root within the searched range.
pub fn kth_root_bounded(w: &BraidWord, k: i64, limits: &Limits) -> Result<Option<BraidWord>> {
    if k <= 0 {
        return Err(BraidError::NotApplicable("root degree must be positive".into()));
    }
    if k == 1 {
        return Ok(Some(w.clone()));
    }
    let e = w.exponent_sum();
    if e % k != 0 {
        return Ok(None);
    }
    let n = w.n();
    if n == 1 {
        return Ok(Some(w.clone()));
    }
    if n > 8 {
        return Err(BraidError::BudgetExceeded { what: "root search strand count", cap: 8 });
    }
    let g = Artin::new(n);
    let (s, conj) = summit_representative(&NormalForm::from_word(g.clone(), w))?;
    let big_n = (n * (n - 1) / 2) as i64;
    let mut by_len: Vec<Vec<Permutation>> = vec![Vec::new(); big_n as usize];
    for p in (0..n).permutations(n) {
        let perm = Permutation::from_images(&p).expect("a permutation");
        let len = perm.inversions();
        if len > 0 && (len as i64) < big_n {
            by_len[len].push(perm);
        }
    }
    let target_perm = s.to_word().permutation();
    let mut search = RootSearch { g, by_len, target: &s, target_perm, k, visited: 0, cap: limits.root_cap };
    let max_l = s.canonical_length() as i64 / k + 2;
    let p_max = s.inf().div_euclid(k);
    for l in 0..=max_l {
        let p_min = (s.sup() + k - 1).div_euclid(k) - l;
        for p in p_min..=p_max {
            let rest = e / k - p * big_n;
            if rest < 0 {
                continue;
            }
            if let Some(r) = search.dfs(p, &mut Vec::new(), l as usize, rest as usize)? {
                // r^k = s = C⁻¹ w C, so (C r C⁻¹)^k = w
                let c = conj.to_word();
                return Ok(Some(r.to_word().conjugate_by(&c.invert())));
            }
        }
    }
    Ok(None)
}

/// Outcome of the pseudo-Anosov generator search.
#[derive(Clone, Debug)]
pub struct PaGenerators {
    pub root: BraidWord,
    pub periodic: BraidWord,
    /// False when a bounded search ran out of budget.
    pub complete: bool,
}

/// `{α, ρ}` with `ρ` the commuting periodic braid (or `Δ²`) and `α` the deepest root of
/// `w ρ^{-b}` found, falling back to `w` itself.
pub fn pa_centralizer_gens(w: &BraidWord, limits: &Limits) -> Result<PaGenerators> {
    let n = w.n();
    let mut complete = true;
    let (rho, ord) = match pa_commuting_periodic(w, limits) {
        Ok(Some(p)) => {
            let o = p.order(n);
            (p.rho, o)
        }
        Ok(None) => (delta_word(n)?.pow(2), 1),
        Err(e) if e.is_budget() => {
            complete = false;
            (delta_word(n)?.pow(2), 1)
        }
        Err(e) => return Err(e),
    };
    let s = summit_representative(&NormalForm::from_word(Artin::new(n), w))?.0;
    let max_a = (s.canonical_length() as i64).clamp(2, 6);
    let mut budget = limits.root_cap;
    'search: for a in (2..=max_a).rev() {
        for b in 0..ord as i64 {
            let x = w.mul(&rho.pow(-b));
            if x.exponent_sum() % a != 0 {
                continue;
            }
            let lim = Limits { root_cap: budget, ..*limits };
            match kth_root_bounded(&x, a, &lim) {
                Ok(Some(r)) => {
                    if commutes(&r, w)? && commutes(&r, &rho)? {
                        return Ok(PaGenerators { root: r.free_reduce(), periodic: rho, complete });
                    }
                }
                Ok(None) => {}
                Err(e) if e.is_budget() => {
                    complete = false;
                    break 'search;
                }
                Err(e) => return Err(e),
            }
            budget = budget.saturating_sub(1).max(1);
        }
    }
    Ok(PaGenerators { root: w.clone(), periodic: rho, complete })
}
