//! Centralizers of periodic braids `δ^k` and `γ^k`, via symmetric lifts from the annulus.

use super::mixed::{mixed_group_gens_form, MixedPartition};
use crate::braid::{small_delta_word, BraidWord};
use crate::classify::PeriodicKind;
use crate::error::{BraidError, Result};

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of points rotated by `rep^k` (`n` for δ, `n - 1` for γ).
fn rotated(kind: PeriodicKind, n: usize) -> usize {
    match kind {
        PeriodicKind::Delta => n,
        PeriodicKind::Gamma => n - 1,
    }
}

/// `d = gcd(rotated points, k)`: strands of the quotient annulus.
pub fn quotient_strands(kind: PeriodicKind, n: usize, k: i64) -> usize {
    gcd(rotated(kind, n) as i64, k) as usize
}

/// Symmetric lift of the annular `σ_u` (`1 ≤ u < d`): one crossing per rotated copy.
fn lift_sigma(kind: PeriodicKind, n: usize, d: usize, u: usize) -> Vec<i32> {
    let off = if kind == PeriodicKind::Gamma { 1 } else { 0 };
    let r = rotated(kind, n) / d;
    (0..r).map(|j| (off + j * d + u) as i32).collect()
}

/// Lift of an annular word on `d` strands; letters `±u` are `σ_u`, letter `±d`
/// stands for the rotation `δ_(d)` and lifts to the representative itself.
pub fn theta_lift(kind: PeriodicKind, n: usize, k: i64, x: &[i32]) -> Result<BraidWord> {
    let d = quotient_strands(kind, n, k);
    if d == rotated(kind, n) {
        return Err(BraidError::NotApplicable("the quotient has as many strands as the disk".into()));
    }
    let rot = kind.base_word(n)?;
    let mut out: Vec<i32> = Vec::new();
    for &e in x {
        let u = e.unsigned_abs() as usize;
        let piece = if u == d {
            rot.letters().to_vec()
        } else if u >= 1 && u < d {
            lift_sigma(kind, n, d, u)
        } else {
            return Err(BraidError::LetterOutOfRange { letter: e, n: d });
        };
        if e > 0 {
            out.extend(piece);
        } else {
            out.extend(piece.iter().rev().map(|l| -l));
        }
    }
    Ok(BraidWord::from_raw(n, out))
}

/// Generators of `Z(rep^k)`: the whole group when `rep^k` is central, otherwise the
/// rotation plus, when the quotient has at least two strands, the lift of `σ_1`.
pub fn periodic_centralizer_gens(kind: PeriodicKind, n: usize, k: i64) -> Result<Vec<BraidWord>> {
    if n == 1 {
        return Ok(Vec::new());
    }
    if n == 2 {
        return Ok(vec![BraidWord::from_raw(2, vec![1])]);
    }
    let d = quotient_strands(kind, n, k);
    if d == rotated(kind, n) {
        return Ok(vec![BraidWord::from_raw(n, vec![1]), small_delta_word(n)?]);
    }
    let mut gens = vec![kind.base_word(n)?];
    if d >= 2 {
        gens.push(theta_lift(kind, n, k, &[1])?);
    }
    Ok(gens)
}

/// Generators of the subgroup of `Z(rep^k)` whose permutation preserves `labels`
/// (constant on the orbits of `rep^k`). Returns `None` when `rep^k` is central.
pub(crate) fn labelled_periodic_gens<T: PartialEq + Clone>(
    kind: PeriodicKind,
    n: usize,
    k: i64,
    labels: &[T],
) -> Result<Option<Vec<BraidWord>>> {
    let d = quotient_strands(kind, n, k);
    if n <= 1 || d == rotated(kind, n) {
        return Ok(None);
    }
    let off = if kind == PeriodicKind::Gamma { 1 } else { 0 };
    // annular strand u sits at slots off + u - 1 (mod d)
    let ann: Vec<T> = (0..d).map(|u| labels[off + u].clone()).collect();
    let p = MixedPartition::from_labels(&ann);
    if p.blocks().len() == 1 {
        return periodic_centralizer_gens(kind, n, k).map(Some);
    }
    // the annulus is the disk with a fixed center strand 1 in front
    let mut blocks: Vec<Vec<usize>> = vec![vec![1]];
    blocks.extend(p.blocks().iter().map(|b| b.iter().map(|x| x + 1).collect()));
    let disk = MixedPartition::new(d + 1, blocks)?;
    let rot = kind.base_word(n)?;
    let all_sigmas: Vec<i32> = (1..d as i32).rev().map(|u| -u).collect();
    // σ_1² around the center is the rotation followed by (σ_1⋯σ_{d-1})⁻¹
    let loop_letters = {
        let mut l = rot.letters().to_vec();
        l.extend(theta_lift(kind, n, k, &all_sigmas)?.letters());
        l
    };
    let mut out = Vec::new();
    for g in mixed_group_gens_form(&disk, true) {
        let ls = g.letters();
        let mut word: Vec<i32> = Vec::new();
        let mut i = 0;
        while i < ls.len() {
            let e = ls[i];
            if e.abs() == 1 {
                if ls.get(i + 1) != Some(&e) {
                    return Err(BraidError::NotApplicable("center strand must wind by full loops".into()));
                }
                if e > 0 {
                    word.extend(&loop_letters);
                } else {
                    word.extend(loop_letters.iter().rev().map(|l| -l));
                }
                i += 2;
            } else {
                let piece = lift_sigma(kind, n, d, e.unsigned_abs() as usize - 1);
                if e > 0 {
                    word.extend(piece);
                } else {
                    word.extend(piece.iter().rev().map(|l| -l));
                }
                i += 1;
            }
        }
        out.push(BraidWord::from_raw(n, word));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::{bkl_normal_form, commutes, is_rotation_symmetric};

    fn rep(kind: PeriodicKind, n: usize, k: i64) -> BraidWord {
        kind.representative(n, k).unwrap()
    }

    #[test]
    fn lift_examples() {
        assert_eq!(theta_lift(PeriodicKind::Delta, 4, 2, &[1]).unwrap().letters(), &[1, 3]);
        assert_eq!(theta_lift(PeriodicKind::Delta, 6, 2, &[1]).unwrap().letters(), &[1, 3, 5]);
        assert_eq!(theta_lift(PeriodicKind::Delta, 12, 9, &[1]).unwrap().letters(), &[1, 4, 7, 10]);
        assert_eq!(theta_lift(PeriodicKind::Delta, 12, 9, &[3]).unwrap(), small_delta_word(12).unwrap());
        assert!(theta_lift(PeriodicKind::Delta, 5, 5, &[1]).is_err());
    }

    #[test]
    fn generators_commute() {
        for kind in [PeriodicKind::Delta, PeriodicKind::Gamma] {
            for n in 2..=8 {
                for k in 0..=n as i64 {
                    let r = rep(kind, n, k);
                    for g in periodic_centralizer_gens(kind, n, k).unwrap() {
                        assert!(commutes(&g, &r).unwrap(), "{kind:?} n={n} k={k} {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn generator_sets() {
        assert_eq!(periodic_centralizer_gens(PeriodicKind::Delta, 5, 2).unwrap().len(), 1);
        let g = periodic_centralizer_gens(PeriodicKind::Delta, 4, 2).unwrap();
        assert_eq!(g[1].letters(), &[1, 3]);
        let g = periodic_centralizer_gens(PeriodicKind::Delta, 3, 3).unwrap();
        assert_eq!(g[0].letters(), &[1]);
    }

    #[test]
    fn lifts_are_rotation_symmetric() {
        for (n, k) in [(4usize, 2i64), (6, 2), (6, 3), (12, 9)] {
            let t = theta_lift(PeriodicKind::Delta, n, k, &[1]).unwrap();
            let d = quotient_strands(PeriodicKind::Delta, n, k);
            let nf = bkl_normal_form(&t);
            assert!(!nf.factors().is_empty());
            assert!(is_rotation_symmetric(&nf, d as i64));
            assert!(is_rotation_symmetric(&nf, k));
        }
    }

    #[test]
    fn labelled_lifts_commute_and_preserve_labels() {
        for kind in [PeriodicKind::Delta, PeriodicKind::Gamma] {
            for n in 3..=8 {
                for k in 1..n as i64 {
                    let d = quotient_strands(kind, n, k);
                    let off = if kind == PeriodicKind::Gamma { 1 } else { 0 };
                    if d == n - off || d < 2 {
                        continue;
                    }
                    // two classes of annular strands: the first and the rest
                    let labels: Vec<usize> =
                        (0..n).map(|t| if t < off { 9 } else if (t - off) % d == 0 { 0 } else { 1 }).collect();
                    let gens = labelled_periodic_gens(kind, n, k, &labels).unwrap().unwrap();
                    let r = rep(kind, n, k);
                    for g in gens {
                        assert!(commutes(&g, &r).unwrap(), "{kind:?} n={n} k={k} {g}");
                        let p = g.permutation();
                        assert!((0..n).all(|t| labels[p.apply(t)] == labels[t]), "{kind:?} n={n} k={k} {g}");
                    }
                }
            }
        }
    }
}
