//! Cycling, decycling, super summit sets and the conjugacy test.

use crate::braid::BraidWord;
use crate::config::Limits;
use crate::error::{BraidError, Result};
use crate::garside::{Artin, GarsideStructure, NormalForm};
use crate::perm::Permutation;
use std::collections::{HashMap, HashSet, VecDeque};

/// Conjugation by the first factor. Returns the new form and the simple `c`
/// with `c^{-1} x c` equal to it.
pub fn cycling<G: GarsideStructure>(x: &NormalForm<G>) -> Result<(NormalForm<G>, Permutation)> {
    let first = x.factors().first().ok_or(BraidError::NoFactors)?;
    let c = x.structure().conj_delta(first, -x.inf());
    Ok((x.conjugate_by_simple(&c), c))
}

/// Conjugation by the inverse of the last factor. Returns the new form and
/// the last factor `A` (the conjugator is `A^{-1}`).
pub fn decycling<G: GarsideStructure>(x: &NormalForm<G>) -> Result<(NormalForm<G>, Permutation)> {
    let last = x.factors().last().ok_or(BraidError::NoFactors)?.clone();
    let g = x.structure();
    let k = x.factors().len();
    let simples: Vec<Permutation> =
        std::iter::once(g.conj_delta(&last, x.inf())).chain(x.factors()[..k - 1].iter().cloned()).collect();
    Ok((NormalForm::from_simples(g.clone(), x.inf(), simples), last))
}

fn simple_nf<G: GarsideStructure>(g: &G, s: &Permutation) -> NormalForm<G> {
    NormalForm::from_simples(g.clone(), 0, [s.clone()])
}

/// Runs `step` until a form repeats; returns a form on the loop and the accumulated conjugator.
fn run_to_loop<G: GarsideStructure>(
    x: NormalForm<G>,
    conj: NormalForm<G>,
    step: impl Fn(&NormalForm<G>) -> Result<(NormalForm<G>, NormalForm<G>)>,
) -> Result<(NormalForm<G>, NormalForm<G>)> {
    let mut seen = HashSet::new();
    let (mut x, mut conj) = (x, conj);
    while !x.is_delta_power() && seen.insert(x.clone()) {
        let (y, c) = step(&x)?;
        conj = conj.multiply(&c);
        x = y;
    }
    Ok((x, conj))
}

/// A conjugate in the super summit set, with `c` such that `c^{-1} x c` is it.
pub fn summit_representative<G: GarsideStructure>(x: &NormalForm<G>) -> Result<(NormalForm<G>, NormalForm<G>)> {
    let g = x.structure().clone();
    let mut cur = x.clone();
    let mut conj = NormalForm::identity(g.clone());
    loop {
        let before = (cur.inf(), cur.sup());
        let (a, c1) = run_to_loop(cur, conj, |y| {
            let (z, s) = cycling(y)?;
            Ok((z, simple_nf(&g, &s)))
        })?;
        let (b, c2) = run_to_loop(a, c1, |y| {
            let (z, s) = decycling(y)?;
            Ok((z, simple_nf(&g, &s).inverse()))
        })?;
        cur = b;
        conj = c2;
        if (cur.inf(), cur.sup()) == before {
            return Ok((cur, conj));
        }
    }
}

/// `X \ u`: the least simple `y` with `u ≼ X y`, for positive `X` given by its factors.
fn right_complement<G: GarsideStructure>(g: &G, factors: &[Permutation], u: &Permutation) -> Permutation {
    let mut v = u.clone();
    for a in factors {
        let l = g.lcm(a, &v);
        v = a.inverse().then(&l);
    }
    v
}

/// Least simple `c` with `s ≼ c` and `c^{-1} x c` in the super summit set (`x` must be in it).
pub fn minimal_simple<G: GarsideStructure>(x: &NormalForm<G>, xinv: &NormalForm<G>, s: &Permutation) -> Permutation {
    let g = x.structure();
    let mut c = s.clone();
    loop {
        let f1 = right_complement(g, x.factors(), &g.conj_delta(&c, x.inf()));
        let f2 = right_complement(g, xinv.factors(), &g.conj_delta(&c, xinv.inf()));
        let next = g.lcm(&g.lcm(&c, &f1), &f2);
        if next == c {
            return c;
        }
        c = next;
    }
}

/// One element of a super summit set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SssElement<G: GarsideStructure> {
    pub nf: NormalForm<G>,
    /// `c` with `c^{-1} · input · c = nf`.
    pub conjugator: NormalForm<G>,
}

impl<G: GarsideStructure> SssElement<G> {
    pub fn conjugator_word(&self) -> BraidWord {
        self.conjugator.to_word()
    }
}

/// The super summit set of a braid, canonically ordered.
#[derive(Clone, Debug)]
pub struct SuperSummitSet<G: GarsideStructure> {
    pub elements: Vec<SssElement<G>>,
}

impl<G: GarsideStructure> SuperSummitSet<G> {
    pub fn inf(&self) -> i64 {
        self.elements[0].nf.inf()
    }

    pub fn canonical_length(&self) -> usize {
        self.elements[0].nf.canonical_length()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &NormalForm<G>) -> bool {
        self.elements.binary_search_by(|e| e.nf.cmp(x)).is_ok()
    }
}

/// Explores the super summit set from `start` (already in it). Stops early when
/// `target` is reached, returning its index.
fn explore<G: GarsideStructure>(
    start: NormalForm<G>,
    start_conj: NormalForm<G>,
    target: Option<&NormalForm<G>>,
    cap: usize,
) -> Result<(Vec<SssElement<G>>, Option<usize>)> {
    let g = start.structure().clone();
    let atoms = g.atoms();
    let mut elements = vec![SssElement { nf: start.clone(), conjugator: start_conj }];
    let mut index: HashMap<NormalForm<G>, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    if target == Some(&start) {
        return Ok((elements, Some(0)));
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let x = elements[i].nf.clone();
        if x.is_delta_power() {
            continue;
        }
        let xinv = x.inverse();
        let mut tried = HashSet::new();
        for a in &atoms {
            let c = minimal_simple(&x, &xinv, a);
            if !tried.insert(c.clone()) {
                continue;
            }
            let y = x.conjugate_by_simple(&c);
            debug_assert_eq!((y.inf(), y.sup()), (x.inf(), x.sup()));
            if index.contains_key(&y) {
                continue;
            }
            let conj = elements[i].conjugator.multiply(&simple_nf(&g, &c));
            index.insert(y.clone(), elements.len());
            elements.push(SssElement { nf: y.clone(), conjugator: conj });
            if target == Some(&y) {
                return Ok((elements.clone(), Some(elements.len() - 1)));
            }
            if elements.len() > cap {
                return Err(BraidError::BudgetExceeded { what: "super summit set size", cap });
            }
            queue.push_back(elements.len() - 1);
        }
    }
    Ok((elements, None))
}

/// Multiplier making the infimum non-negative by a central power of the Garside element.
fn positivity_shift<G: GarsideStructure>(x: &NormalForm<G>) -> i64 {
    if x.inf() >= 0 {
        return 0;
    }
    let ord = x.structure().delta_conj_order();
    // central powers of Δ are multiples of the conjugation order
    let need = -x.inf();
    (need + ord - 1) / ord * ord
}

/// The super summit set of `w` in structure `g`.
pub fn super_summit_set_in<G: GarsideStructure>(g: G, w: &BraidWord, limits: &Limits) -> Result<SuperSummitSet<G>> {
    let nf = NormalForm::from_word(g, w);
    let shift = positivity_shift(&nf);
    let (rep, conj) = summit_representative(&nf.shift_inf(shift))?;
    let (mut elements, _) = explore(rep, conj, None, limits.sss_cap)?;
    for e in &mut elements {
        e.nf = e.nf.shift_inf(-shift);
    }
    elements.sort_by(|a, b| a.nf.cmp(&b.nf));
    Ok(SuperSummitSet { elements })
}

/// The super summit set of `w` in the classical structure.
pub fn super_summit_set(w: &BraidWord, limits: &Limits) -> Result<SuperSummitSet<Artin>> {
    super_summit_set_in(Artin::new(w.n()), w, limits)
}

fn quick_invariants_differ(a: &BraidWord, b: &BraidWord) -> bool {
    a.exponent_sum() != b.exponent_sum() || a.permutation().cycle_type() != b.permutation().cycle_type()
}

/// A conjugator `c` with `c^{-1} a c = b`, if one exists.
pub fn are_conjugate_in<G: GarsideStructure>(
    g: G,
    a: &BraidWord,
    b: &BraidWord,
    limits: &Limits,
) -> Result<Option<BraidWord>> {
    a.check_same(b)?;
    if quick_invariants_differ(a, b) {
        return Ok(None);
    }
    let na = NormalForm::from_word(g.clone(), a);
    let nb = NormalForm::from_word(g.clone(), b);
    let (ra, ca) = summit_representative(&na)?;
    let (rb, cb) = summit_representative(&nb)?;
    if (ra.inf(), ra.sup()) != (rb.inf(), rb.sup()) {
        return Ok(None);
    }
    let (elements, hit) = explore(ra, ca, Some(&rb), limits.sss_cap)?;
    Ok(hit.map(|i| elements[i].conjugator.multiply(&cb.inverse()).to_word()))
}

/// Conjugacy test in the classical structure.
pub fn are_conjugate(a: &BraidWord, b: &BraidWord, limits: &Limits) -> Result<Option<BraidWord>> {
    are_conjugate_in(Artin::new(a.n()), a, b, limits)
}
