//! Tubular braid plus interior braids of a reducible braid in rounded position,
//! and the regular form used to build centralizers.

use crate::braid::{delta_word, BraidWord};
use crate::cable::{arrival_sizes, cable, offsets, CablePattern};
use crate::config::Limits;
use crate::curves::{is_invariant, RoundMulticurve};
use crate::error::{BraidError, Result};
use crate::garside::{commutes, nf_equal, normal_form, Artin, GarsideStructure};
use crate::perm::Permutation;
use crate::sss::are_conjugate;
use serde::Serialize;

/// Tubular braid and interiors of a braid whose round system is invariant.
///
/// Tubes are the slots of the tube partition (outermost intervals plus singletons).
/// `interiors[j]` is the braid appended on the tube arriving at slot `j`.
/// Orbits list start slots `s_1..s_r` with the tube starting at `s_k` ending at `s_{k+1}`;
/// the interior carried by that tube is at arrival slot `s_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubularDecomposition {
    pub base: BraidWord,
    pub rounding_conjugator: BraidWord,
    pub system: RoundMulticurve,
    pub sizes: Vec<usize>,
    pub tubular: BraidWord,
    pub interiors: Vec<BraidWord>,
    pub orbits: Vec<Vec<usize>>,
}

fn word_from(n: usize, letters: Vec<i32>) -> BraidWord {
    BraidWord::from_raw(n, letters)
}

fn simple_letters(p: &Permutation) -> Vec<i32> {
    if p.n() < 2 {
        return Vec::new();
    }
    Artin::new(p.n()).simple_letters(p)
}

fn delta_letters(s: usize) -> Vec<i32> {
    if s < 2 {
        return Vec::new();
    }
    delta_word(s).expect("s >= 2").letters().to_vec()
}

/// Splits `w` along tubes of the given sizes (by start slot). Returns the tubular word,
/// the sizes at the bottom and the interiors by arrival slot.
pub(crate) fn split(w: &BraidWord, sizes: &[usize]) -> Result<(BraidWord, Vec<usize>, Vec<BraidWord>)> {
    let m = sizes.len();
    if sizes.iter().sum::<usize>() != w.n() {
        return Err(BraidError::SizeMismatch(format!("tube sizes do not add up to {}", w.n())));
    }
    let nf = normal_form(w);
    let mut cur = sizes.to_vec();
    let mut ints: Vec<Vec<i32>> = vec![Vec::new(); m];
    let mut tub: Vec<i32> = Vec::new();
    let reverse = |cur: &mut Vec<usize>, ints: &mut Vec<Vec<i32>>| {
        cur.reverse();
        ints.reverse();
    };
    // Δ = cable(Δ_m) · (Δ in every tube)
    for _ in 0..nf.inf().max(0) {
        tub.extend(delta_letters(m));
        reverse(&mut cur, &mut ints);
        for (j, int) in ints.iter_mut().enumerate() {
            int.extend(delta_letters(cur[j]));
        }
    }
    for _ in 0..(-nf.inf()).max(0) {
        for (j, int) in ints.iter_mut().enumerate() {
            int.extend(delta_letters(cur[j]).into_iter().rev().map(|x| -x));
        }
        tub.extend(delta_letters(m).into_iter().rev().map(|x| -x));
        reverse(&mut cur, &mut ints);
    }
    for p in nf.factors() {
        let offs = offsets(&cur);
        let mut blocks = Vec::with_capacity(m);
        for j in 0..m {
            let img: Vec<usize> = (0..cur[j]).map(|k| p.apply(offs[j] + k)).collect();
            let lo = *img.iter().min().expect("tubes are nonempty");
            let hi = *img.iter().max().expect("tubes are nonempty");
            if hi - lo + 1 != cur[j] {
                return Err(BraidError::NotTubePreserving);
            }
            blocks.push((lo, j, img));
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&j| blocks[j].0);
        let mut rank = vec![0; m];
        for (r, &j) in order.iter().enumerate() {
            rank[j] = r;
        }
        tub.extend(simple_letters(&Permutation::from_images(&rank).expect("ranks form a permutation")));
        let mut new_ints = vec![Vec::new(); m];
        let mut new_sizes = vec![0; m];
        for (lo, j, img) in blocks {
            let rel: Vec<usize> = img.iter().map(|&x| x - lo).collect();
            let mut int = std::mem::take(&mut ints[j]);
            int.extend(simple_letters(&Permutation::from_images(&rel).expect("contiguous block")));
            new_ints[rank[j]] = int;
            new_sizes[rank[j]] = cur[j];
        }
        ints = new_ints;
        cur = new_sizes;
    }
    let interiors = ints.into_iter().zip(&cur).map(|(l, &s)| word_from(s, l)).collect();
    Ok((word_from(m, tub), cur, interiors))
}

/// Cycles of the tube permutation as start-slot lists, each beginning at its smallest slot.
fn tube_orbits(tubular: &BraidWord) -> Vec<Vec<usize>> {
    let perm = tubular.permutation();
    let mut seen = vec![false; tubular.n()];
    let mut out = Vec::new();
    for s in 0..tubular.n() {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![s];
        seen[s] = true;
        let mut x = perm.apply(s);
        while x != s {
            seen[x] = true;
            orbit.push(x);
            x = perm.apply(x);
        }
        out.push(orbit);
    }
    out
}

/// Decomposes `c^{-1} w c`, which must preserve `system`.
pub fn decompose(w: &BraidWord, system: &RoundMulticurve, rounding_conjugator: &BraidWord) -> Result<TubularDecomposition> {
    w.check_same(rounding_conjugator)?;
    let rounded = w.conjugate_by(rounding_conjugator);
    if !is_invariant(&rounded, &system.essential())? {
        return Err(BraidError::NotInvariant);
    }
    let parts = system.tube_partition();
    let sizes: Vec<usize> = parts.iter().map(|&(a, b)| b - a + 1).collect();
    let (tubular, end, interiors) = split(&rounded, &sizes)?;
    if end != sizes {
        return Err(BraidError::NotInvariant);
    }
    let d = TubularDecomposition {
        base: w.clone(),
        rounding_conjugator: rounding_conjugator.clone(),
        system: RoundMulticurve::new_with_singletons(w.n(), parts)?,
        sizes,
        orbits: tube_orbits(&tubular),
        tubular,
        interiors,
    };
    if !nf_equal(&d.braid()?, &rounded)? {
        return Err(BraidError::NotTubePreserving);
    }
    Ok(d)
}

impl TubularDecomposition {
    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Number of tubes.
    pub fn m(&self) -> usize {
        self.sizes.len()
    }

    pub fn pattern(&self) -> CablePattern {
        CablePattern { sizes: self.sizes.clone() }
    }

    /// The rounded braid rebuilt from its tubular and interior parts.
    pub fn braid(&self) -> Result<BraidWord> {
        cable(&self.tubular, &self.pattern(), &self.interiors)
    }

    /// Orbit index and position of a start slot.
    pub fn locate(&self, slot: usize) -> (usize, usize) {
        for (i, o) in self.orbits.iter().enumerate() {
            if let Some(k) = o.iter().position(|&s| s == slot) {
                return (i, k);
            }
        }
        unreachable!("every slot lies in an orbit")
    }

    /// Interiors `β_{i,1}, …, β_{i,r_i}` carried along orbit `i`.
    pub fn orbit_interiors(&self, i: usize) -> Vec<BraidWord> {
        let o = &self.orbits[i];
        (0..o.len()).map(|k| self.interiors[o[(k + 1) % o.len()]].clone()).collect()
    }

    /// Tube size of the tubes in orbit `i`.
    pub fn orbit_size(&self, i: usize) -> usize {
        self.sizes[self.orbits[i][0]]
    }

    /// Braid with trivial tubular part and the given interiors (by slot).
    pub fn tube_braid(&self, interiors: &[BraidWord]) -> Result<BraidWord> {
        cable(&BraidWord::identity(self.m()), &self.pattern(), interiors)
    }

    fn trivial_interiors(&self) -> Vec<BraidWord> {
        self.sizes.iter().map(|&s| BraidWord::identity(s)).collect()
    }

    /// Cable of `eta` with trivial interiors; tube sizes must be carried onto equal sizes.
    pub fn psi(&self, eta: &BraidWord) -> Result<BraidWord> {
        if eta.n() != self.m() {
            return Err(BraidError::StrandMismatch(eta.n(), self.m()));
        }
        if arrival_sizes(eta, &self.pattern()) != self.sizes {
            return Err(BraidError::InconsistentPermutation);
        }
        cable(eta, &self.pattern(), &self.trivial_interiors())
    }

    /// Tubular braid of an `n`-strand braid preserving the tube system.
    pub fn project_p(&self, alpha: &BraidWord) -> Result<BraidWord> {
        self.split_preserving(alpha).map(|(t, _)| t)
    }

    /// Tubular braid and interiors (by arrival slot) of a tube-preserving braid.
    pub fn split_preserving(&self, alpha: &BraidWord) -> Result<(BraidWord, Vec<BraidWord>)> {
        if alpha.n() != self.n() {
            return Err(BraidError::StrandMismatch(alpha.n(), self.n()));
        }
        let (t, end, ints) = split(alpha, &self.sizes)?;
        if end != self.sizes {
            return Err(BraidError::NotTubePreserving);
        }
        Ok((t, ints))
    }
}

/// A decomposition where each orbit carries one nontrivial interior, at the tube
/// `C_{i,r_i}`, and interiors of equal size are equal or non-conjugate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularForm {
    pub decomposition: TubularDecomposition,
    pub nontrivial: Vec<BraidWord>,
    /// `c` with `c^{-1} · base · c` equal to the regular braid.
    pub conjugator: BraidWord,
}

/// Transfuses every orbit's interiors into its last tube and equalizes conjugate interiors.
pub fn to_regular_form(d: &TubularDecomposition, limits: &Limits) -> Result<RegularForm> {
    let mut d = d.clone();
    let mut conj = d.rounding_conjugator.clone();
    // α_{s_{k+1}} = (β_{i,1}⋯β_{i,k})^{-1}, trivial on s_1
    let mut alpha = d.trivial_interiors();
    let mut nontrivial = Vec::with_capacity(d.orbits.len());
    for i in 0..d.orbits.len() {
        let o = d.orbits[i].clone();
        let xs = d.orbit_interiors(i);
        let mut prefix = BraidWord::identity(d.orbit_size(i));
        for k in 0..o.len() - 1 {
            prefix = prefix.mul(&xs[k]);
            alpha[o[k + 1]] = prefix.invert();
        }
        let full = prefix.mul(&xs[o.len() - 1]);
        let full = if full.is_empty() { full } else { normal_form(&full).to_word() };
        for &s in &o {
            d.interiors[s] = BraidWord::identity(d.sizes[s]);
        }
        d.interiors[o[0]] = full.clone();
        nontrivial.push(full);
    }
    conj = conj.mul(&d.tube_braid(&alpha)?);

    // equalize: conjugating orbit j's tubes by h turns β_[j] into h^{-1} β_[j] h
    let mut h_all = d.trivial_interiors();
    let mut touched = false;
    for j in 0..nontrivial.len() {
        for i in 0..j {
            if d.orbit_size(i) != d.orbit_size(j) || nontrivial[i] == nontrivial[j] {
                continue;
            }
            if let Some(h) = are_conjugate(&nontrivial[j], &nontrivial[i], limits)? {
                for &s in &d.orbits[j] {
                    h_all[s] = h.clone();
                }
                nontrivial[j] = nontrivial[i].clone();
                d.interiors[d.orbits[j][0]] = nontrivial[i].clone();
                touched = true;
                break;
            }
        }
    }
    if touched {
        conj = conj.mul(&d.tube_braid(&h_all)?);
    }
    d.rounding_conjugator = conj.clone();
    if !nf_equal(&d.base.conjugate_by(&conj), &d.braid()?)? {
        return Err(BraidError::NotTubePreserving);
    }
    Ok(RegularForm { decomposition: d, nontrivial, conjugator: conj })
}

impl RegularForm {
    /// The braid in regular form.
    pub fn braid(&self) -> Result<BraidWord> {
        self.decomposition.braid()
    }

    /// Trivial tubular part with `β_[i]` in the tubes `C_{i,k+1}, …, C_{i,r_i}`;
    /// conjugating by it moves `β_[i]` to the tube `C_{i,k}`.
    pub fn mu(&self, i: usize, k: usize) -> Result<BraidWord> {
        let d = &self.decomposition;
        let o = d.orbits.get(i).ok_or_else(|| BraidError::IndexOutOfRange(format!("orbit {i}")))?;
        if k == 0 || k >= o.len() {
            return Err(BraidError::IndexOutOfRange(format!("k = {k} for an orbit of length {}", o.len())));
        }
        let mut ints = d.trivial_interiors();
        for &s in &o[k..] {
            ints[s] = self.nontrivial[i].clone();
        }
        d.tube_braid(&ints)
    }

    /// `γ` placed in every tube of orbit `i`; `γ` must commute with `β_[i]`.
    pub fn g_embed(&self, i: usize, gamma: &BraidWord) -> Result<BraidWord> {
        let d = &self.decomposition;
        let o = d.orbits.get(i).ok_or_else(|| BraidError::IndexOutOfRange(format!("orbit {i}")))?;
        if gamma.n() != d.orbit_size(i) {
            return Err(BraidError::StrandMismatch(gamma.n(), d.orbit_size(i)));
        }
        if !commutes(gamma, &self.nontrivial[i])? {
            return Err(BraidError::NotInCentralizerOfInterior);
        }
        let mut ints = d.trivial_interiors();
        for &s in o {
            ints[s] = gamma.clone();
        }
        d.tube_braid(&ints)
    }

    pub fn psi(&self, eta: &BraidWord) -> Result<BraidWord> {
        self.decomposition.psi(eta)
    }

    pub fn project_p(&self, alpha: &BraidWord) -> Result<BraidWord> {
        self.decomposition.project_p(alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn rc(n: usize, iv: &[(usize, usize)]) -> RoundMulticurve {
        RoundMulticurve::new(n, iv.to_vec()).unwrap()
    }

    #[test]
    fn staircase_braid() {
        let b = w(4, &[1, 3, 3]);
        let d = decompose(&b, &rc(4, &[(1, 2), (3, 4)]), &BraidWord::identity(4)).unwrap();
        assert!(d.tubular.is_empty());
        assert_eq!(d.interiors, vec![w(2, &[1]), w(2, &[1, 1])]);
        assert_eq!(d.orbits, vec![vec![0], vec![1]]);
        let r = to_regular_form(&d, &Limits::default()).unwrap();
        assert_eq!(r.nontrivial, vec![w(2, &[1]), w(2, &[1, 1])]);
        assert_eq!(r.g_embed(0, &w(2, &[1])).unwrap(), w(4, &[1]));
    }

    #[test]
    fn full_twist_of_two_tubes() {
        let b = BraidWord::parse("B5: 3 4 2 3 1 2 2 3 4 1 2 3").unwrap();
        let d = decompose(&b, &rc(5, &[(1, 3), (4, 5)]), &BraidWord::identity(5)).unwrap();
        assert!(nf_equal(&d.tubular, &w(2, &[1, 1])).unwrap());
        assert!(d.interiors.iter().all(|x| normal_form(x).to_word().is_empty()));
    }

    #[test]
    fn single_orbit_transfusion() {
        let tub = w(3, &[1, 2]);
        let pat = CablePattern::new(vec![2, 2, 2]).unwrap();
        let (a, b, c) = (w(2, &[1]), w(2, &[1, 1, 1]), w(2, &[-1]));
        let x = cable(&tub, &pat, &[a.clone(), b.clone(), c.clone()]).unwrap();
        let sys = rc(6, &[(1, 2), (3, 4), (5, 6)]);
        let d = decompose(&x, &sys, &BraidWord::identity(6)).unwrap();
        assert_eq!(d.orbits, vec![vec![0, 2, 1]]);
        let r = to_regular_form(&d, &Limits::default()).unwrap();
        let xs = d.orbit_interiors(0);
        assert!(nf_equal(&r.nontrivial[0], &xs[0].mul(&xs[1]).mul(&xs[2])).unwrap());
        assert_eq!(r.nontrivial[0].exponent_sum(), 3);
        // μ moves β_[1] to C_{1,1}
        let rb = r.braid().unwrap();
        let moved = rb.conjugate_by(&r.mu(0, 1).unwrap());
        let dm = decompose(&moved, &sys, &BraidWord::identity(6)).unwrap();
        let ints = dm.orbit_interiors(0);
        assert!(nf_equal(&ints[0], &r.nontrivial[0]).unwrap());
        assert!(ints[1..].iter().all(|x| normal_form(x).to_word().is_empty()));
        assert!(r.mu(0, 3).is_err());
    }

    #[test]
    fn psi_and_projection() {
        let d = decompose(&w(4, &[1, 3, 3]), &rc(4, &[(1, 2), (3, 4)]), &BraidWord::identity(4)).unwrap();
        let e = w(2, &[1, 1, -1, 1]);
        let p = d.psi(&e).unwrap();
        assert!(nf_equal(&d.project_p(&p).unwrap(), &e).unwrap());
        let d2 = decompose(&w(3, &[1, 1]), &rc(3, &[(1, 2)]), &BraidWord::identity(3)).unwrap();
        assert_eq!(d2.psi(&w(2, &[1])), Err(BraidError::InconsistentPermutation));
        assert_eq!(d2.project_p(&w(3, &[2])), Err(BraidError::NotTubePreserving));
    }
}
