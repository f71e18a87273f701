//! Nielsen–Thurston type of a braid: periodic, reducible or pseudo-Anosov.

use crate::braid::{gamma_word, small_delta_word, BraidWord};
use crate::cable::{arrival_sizes, cable_trivial, CablePattern};
use crate::config::Limits;
use crate::curves::{self, act, encode_interval_curve, is_invariant, Interval, LaminationCoords, RoundMulticurve};
use crate::error::{BraidError, Result};
use crate::garside::{nf_equal, normal_form, Dual};
use crate::sss::{are_conjugate, are_conjugate_in, super_summit_set};
use serde::Serialize;
use crate::tubular::decompose;
use std::collections::HashSet;

/// Which periodic representative a periodic braid is conjugate to a power of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PeriodicKind {
    Delta,
    Gamma,
}

impl PeriodicKind {
    /// `δ_(n)` or `γ_(n)`.
    pub fn base_word(self, n: usize) -> Result<BraidWord> {
        match self {
            PeriodicKind::Delta => small_delta_word(n),
            PeriodicKind::Gamma => gamma_word(n),
        }
    }

    /// `δ_(n)^k` or `γ_(n)^k`.
    pub fn representative(self, n: usize, k: i64) -> Result<BraidWord> {
        if n == 1 {
            return Ok(BraidWord::identity(1));
        }
        Ok(self.base_word(n)?.pow(k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum NTClass {
    Periodic {
        kind: PeriodicKind,
        k: i64,
        /// `c` with `c^{-1} w c` equal to the representative power.
        conjugator: BraidWord,
    },
    Reducible {
        reduction: RoundMulticurve,
        /// `c` with `c^{-1} w c` preserving `reduction`.
        rounding_conjugator: BraidWord,
        crs_exact: bool,
    },
    PseudoAnosov,
}

impl NTClass {
    pub fn tag(&self) -> &'static str {
        match self {
            NTClass::Periodic { .. } => "periodic",
            NTClass::Reducible { .. } => "reducible",
            NTClass::PseudoAnosov => "pseudo_anosov",
        }
    }
}

fn delta_square_power(w: &BraidWord) -> Option<i64> {
    let nf = normal_form(w);
    (nf.factors().is_empty() && nf.inf() % 2 == 0).then(|| nf.inf() / 2)
}

/// `(kind, k)` when `w^n = Δ^{2k}` (δ-type) or `w^{n-1} = Δ^{2k}` (γ-type).
pub fn is_periodic(w: &BraidWord) -> Option<(PeriodicKind, i64)> {
    let n = w.n();
    if n == 1 {
        return Some((PeriodicKind::Delta, 0));
    }
    if let Some(k) = delta_square_power(&w.pow(n as i64)) {
        debug_assert_eq!(w.exponent_sum(), k * (n as i64 - 1));
        return Some((PeriodicKind::Delta, k));
    }
    if n >= 3 {
        if let Some(k) = delta_square_power(&w.pow(n as i64 - 1)) {
            debug_assert_eq!(w.exponent_sum(), k * n as i64);
            return Some((PeriodicKind::Gamma, k));
        }
    }
    None
}

/// A conjugator `c` with `c^{-1} w c = rep^k`.
pub fn periodic_certificate(w: &BraidWord, kind: PeriodicKind, k: i64, limits: &Limits) -> Result<BraidWord> {
    let n = w.n();
    let target = kind.representative(n, k)?;
    if nf_equal(w, &target)? {
        return Ok(BraidWord::identity(n));
    }
    // powers of δ are summit elements of the dual structure, so try it first
    let dual = match are_conjugate_in(Dual::new(n), w, &target, limits) {
        Ok(found) => found,
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e),
    };
    let c = match dual {
        Some(c) => c,
        None => are_conjugate(w, &target, limits)?
            .ok_or_else(|| BraidError::ConjugacySearchFailed(format!("{w} vs {target}")))?,
    };
    debug_assert!(nf_equal(&w.conjugate_by(&c), &target)?);
    Ok(c)
}

/// The outermost maximal invariant round system of the first element
/// (input first, then the super summit set in canonical order) that has one.
pub fn find_reduction(w: &BraidWord, limits: &Limits) -> Result<Option<(RoundMulticurve, BraidWord)>> {
    let n = w.n();
    if n < 3 {
        return Ok(None);
    }
    let sys = curves::maximal_outer_system(w)?;
    if !sys.is_empty() {
        return Ok(Some((sys, BraidWord::identity(n))));
    }
    let sss = super_summit_set(w, limits)?;
    for e in &sss.elements {
        let sys = curves::maximal_outer_system(&e.nf.to_word())?;
        if !sys.is_empty() {
            return Ok(Some((sys, e.conjugator_word())));
        }
    }
    Ok(None)
}

fn crossing(a: Interval, b: Interval) -> bool {
    !(a.1 < b.0 || b.1 < a.0 || (a.0 <= b.0 && b.1 <= a.1) || (b.0 <= a.0 && a.1 <= b.1))
}

/// Power-invariant round intervals of `w` that cross no other power-invariant round interval.
fn compatible_candidates(w: &BraidWord, max_power: usize) -> Result<Vec<Interval>> {
    let cand = curves::power_invariant_intervals(w, max_power)?;
    Ok(cand.iter().copied().filter(|&x| cand.iter().all(|&y| !crossing(x, y))).collect())
}

/// Extends `reduction` (invariant under the rounded braid `w`) by compatible round curves
/// invariant under powers `w^j`, `j ≤ max_power`, and keeps the outermost ones.
/// The flag is true when no super summit element reveals candidate curves beyond those seen in `w`.
pub fn crs_power_scan(
    w: &BraidWord,
    reduction: &RoundMulticurve,
    max_power: usize,
    limits: &Limits,
) -> Result<(RoundMulticurve, bool)> {
    let n = w.n();
    let cands = compatible_candidates(w, max_power)?;
    let mut all: Vec<Interval> = reduction.intervals().to_vec();
    all.extend(cands.iter().copied().filter(|&x| reduction.intervals().iter().all(|&y| !crossing(x, y))));
    let extended = RoundMulticurve::new(n, all)?.outermost();
    let result = if is_invariant(w, &extended)? { extended } else { reduction.clone() };

    let seen: HashSet<LaminationCoords> =
        cands.iter().map(|&iv| encode_interval_curve(n, iv)).collect::<Result<_>>()?;
    let sss = match super_summit_set(w, limits) {
        Ok(s) => s,
        Err(e) if e.is_budget() => return Ok((result, false)),
        Err(e) => return Err(e),
    };
    let mut exact = true;
    'outer: for e in &sss.elements {
        let back = e.conjugator_word().invert();
        for iv in compatible_candidates(&e.nf.to_word(), max_power)? {
            // a curve fixed by c^{-1} w c pulls back to one fixed by w
            if !seen.contains(&act(&back, &encode_interval_curve(n, iv)?)?) {
                exact = false;
                break 'outer;
            }
        }
    }
    Ok((result, exact))
}

/// While the tubular braid of `(system, c)` is itself reducible, its reduction is
/// pulled back through a cabled conjugator and merged into the system, so the
/// outer tubes carry a periodic or pseudo-Anosov tubular braid.
fn enlarge_outer(
    w: &BraidWord,
    mut system: RoundMulticurve,
    mut c: BraidWord,
    limits: &Limits,
) -> Result<(RoundMulticurve, BraidWord)> {
    loop {
        let d = decompose(w, &system, &c)?;
        let NTClass::Reducible { reduction, rounding_conjugator: c2, .. } = classify(&d.tubular, limits)? else {
            return Ok((system, c));
        };
        let pat = d.pattern();
        c = c.mul(&cable_trivial(&c2, &pat)?);
        let sizes = arrival_sizes(&c2, &pat);
        let offs = CablePattern::new(sizes.clone())?.offsets();
        let span = |(p, q): Interval| (offs[p - 1] + 1, offs[q - 1] + sizes[q - 1]);
        let mut iv: Vec<Interval> = reduction.intervals().iter().map(|&x| span(x)).collect();
        iv.extend((1..=sizes.len()).filter(|&j| sizes[j - 1] >= 2).map(|j| span((j, j))));
        system = RoundMulticurve::new(w.n(), iv)?.outermost();
    }
}

/// Nielsen–Thurston classification with verified certificates.
pub fn classify(w: &BraidWord, limits: &Limits) -> Result<NTClass> {
    if let Some((kind, k)) = is_periodic(w) {
        let conjugator = periodic_certificate(w, kind, k, limits)?;
        return Ok(NTClass::Periodic { kind, k, conjugator });
    }
    match find_reduction(w, limits)? {
        Some((sys, c)) => {
            let rounded = normal_form(&w.conjugate_by(&c)).to_word();
            let (reduction, crs_exact) = crs_power_scan(&rounded, &sys, w.n(), limits)?;
            let (reduction, c) = enlarge_outer(w, reduction, c, limits)?;
            if !is_invariant(&w.conjugate_by(&c), &reduction)? {
                return Err(BraidError::NotInvariant);
            }
            Ok(NTClass::Reducible { reduction, rounding_conjugator: c, crs_exact })
        }
        None => Ok(NTClass::PseudoAnosov),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::delta_word;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn periodic_examples() {
        assert_eq!(is_periodic(&w(3, &[1, 2])), Some((PeriodicKind::Delta, 1)));
        assert_eq!(is_periodic(&w(3, &[1, 1, 2])), Some((PeriodicKind::Gamma, 1)));
        assert_eq!(is_periodic(&w(4, &[1, 3, 3])), None);
        assert_eq!(is_periodic(&delta_word(5).unwrap().pow(2)), Some((PeriodicKind::Delta, 5)));
        assert_eq!(is_periodic(&w(2, &[1, 1, 1])), Some((PeriodicKind::Delta, 3)));
    }

    #[test]
    fn certificate_examples() {
        let lim = Limits::default();
        let x = w(3, &[2, 1]);
        let c = periodic_certificate(&x, PeriodicKind::Delta, 1, &lim).unwrap();
        assert!(nf_equal(&x.conjugate_by(&c), &w(3, &[1, 2])).unwrap());
        let d = small_delta_word(4).unwrap().pow(2);
        assert!(periodic_certificate(&d, PeriodicKind::Delta, 2, &lim).unwrap().is_empty());
        let g = gamma_word(3).unwrap().conjugate_by(&w(3, &[2, -1, 2, 2]));
        let c = periodic_certificate(&g, PeriodicKind::Gamma, 1, &lim).unwrap();
        assert!(nf_equal(&g.conjugate_by(&c), &gamma_word(3).unwrap()).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let lim = Limits::default();
        let (sys, c) = find_reduction(&w(4, &[1, 3, 3]), &lim).unwrap().unwrap();
        assert_eq!(sys.to_string(), "{[1,2],[3,4]}");
        assert!(c.is_empty());
        let b5 = BraidWord::parse("B5: 3 4 2 3 1 2 2 3 4 1 2 3").unwrap();
        let (sys, _) = find_reduction(&b5, &lim).unwrap().unwrap();
        assert_eq!(sys.to_string(), "{[1,3],[4,5]}");
        assert_eq!(find_reduction(&w(3, &[1, -2]), &lim).unwrap(), None);
    }

    #[test]
    fn swapped_tubes_are_enclosed() {
        // two swapped 2-tubes whose tubular braid fixes a curve around both
        let b = BraidWord::parse("B5: 4 1 2 -3 -1 4 2 3 4 -3 -4 -4").unwrap();
        let NTClass::Reducible { reduction, rounding_conjugator, .. } = classify(&b, &Limits::default()).unwrap() else {
            panic!("not reducible");
        };
        assert_eq!(reduction.to_string(), "{[2,5]}");
        let d = decompose(&b, &reduction, &rounding_conjugator).unwrap();
        assert_ne!(classify(&d.tubular, &Limits::default()).unwrap().tag(), "reducible");
    }

    #[test]
    fn classify_examples() {
        let lim = Limits::default();
        assert_eq!(classify(&w(3, &[1, -2]), &lim).unwrap(), NTClass::PseudoAnosov);
        match classify(&w(4, &[1, 3, 3]), &lim).unwrap() {
            NTClass::Reducible { reduction, crs_exact, .. } => {
                assert_eq!(reduction.to_string(), "{[1,2],[3,4]}");
                assert!(crs_exact);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            classify(&delta_word(5).unwrap().pow(2), &lim).unwrap(),
            NTClass::Periodic { kind: PeriodicKind::Delta, k: 5, .. }
        ));
    }
}
