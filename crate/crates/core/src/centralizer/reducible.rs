//! Reducible braids: interior centralizers, the tubular group `Z_0` and its section.

use super::mixed::{mixed_group_gens, MixedPartition};
use super::pa::pa_centralizer_gens;
use super::periodic::labelled_periodic_gens;
use crate::braid::BraidWord;
use crate::classify::{classify, NTClass};
use crate::config::Limits;
use crate::error::{BraidError, Result};
use crate::garside::{commutes, nf_equal};
use crate::perm::Permutation;
use crate::tubular::RegularForm;

/// Class label of every tube slot: tube size and the orbit's nontrivial interior.
pub fn slot_labels(rf: &RegularForm) -> Vec<(usize, BraidWord)> {
    let d = &rf.decomposition;
    (0..d.m()).map(|s| (d.sizes[s], rf.nontrivial[d.locate(s).0].clone())).collect()
}

fn preserves(p: &Permutation, labels: &[(usize, BraidWord)]) -> bool {
    (0..labels.len()).all(|t| labels[p.apply(t)] == labels[t])
}

/// Generators of `Z_0`: braids on the tubes commuting with the tubular braid whose
/// permutation preserves the interior classes. The flag is false when a bounded
/// search inside ran out of budget.
pub fn z0_gens(rf: &RegularForm, limits: &Limits) -> Result<(Vec<BraidWord>, bool)> {
    let d = &rf.decomposition;
    let m = d.m();
    let labels = slot_labels(rf);
    if m == 1 {
        return Ok((Vec::new(), true));
    }
    let tub = &d.tubular;
    let mut complete = true;
    let gens = match classify(tub, limits)? {
        NTClass::Periodic { kind, k, conjugator } => {
            // labels seen from the representative: slot t there is slot c⁻¹(t) here
            let back = conjugator.permutation().inverse();
            let rep_labels: Vec<(usize, BraidWord)> = (0..m).map(|t| labels[back.apply(t)].clone()).collect();
            match labelled_periodic_gens(kind, m, k, &rep_labels)? {
                Some(gs) => gs.into_iter().map(|g| g.conjugate_by(&conjugator.invert())).collect(),
                // central tubular braid: every class-preserving braid commutes
                None => mixed_group_gens(&MixedPartition::from_labels(&labels)),
            }
        }
        NTClass::PseudoAnosov => {
            let pa = pa_centralizer_gens(tub, limits)?;
            complete &= pa.complete;
            class_preserving_lattice(&pa.root, &pa.periodic, &labels)
        }
        NTClass::Reducible { .. } => {
            return Err(BraidError::NotApplicable("tubular braid is reducible".into()));
        }
    };
    for g in &gens {
        if !commutes(g, tub)? || !preserves(&g.permutation(), &labels) {
            return Err(BraidError::NotConsistent);
        }
    }
    Ok((gens, complete))
}

/// Basis of the sublattice of `⟨α⟩ × ⟨ρ⟩` whose permutations preserve the labels.
fn class_preserving_lattice(alpha: &BraidWord, rho: &BraidWord, labels: &[(usize, BraidWord)]) -> Vec<BraidWord> {
    let (pa, pr) = (alpha.permutation(), rho.permutation());
    let (oa, or) = (pa.order() as i64, pr.order() as i64);
    let ok = |a: i64, b: i64| preserves(&pa.pow(a).then(&pr.pow(b)), labels);
    let a1 = (1..=oa).find(|&a| ok(a, 0)).expect("α^order is pure");
    let (a0, b0) = (1..=or)
        .find_map(|b| (0..a1).find(|&a| ok(a, b)).map(|a| (a, b)))
        .expect("ρ^order is pure");
    vec![alpha.pow(a1), alpha.pow(a0).mul(&rho.pow(b0))]
}

/// A preimage of `eta ∈ Z_0` in `Z(β)`: the cable of `eta` followed by powers of the
/// orbits' nontrivial interiors chosen so that the result commutes with `β`.
pub fn section_h(rf: &RegularForm, eta: &BraidWord) -> Result<BraidWord> {
    let d = &rf.decomposition;
    let m = d.m();
    if eta.n() != m {
        return Err(BraidError::StrandMismatch(eta.n(), m));
    }
    let pb = d.tubular.permutation();
    let pe_inv = eta.permutation().inverse();
    let designated: Vec<bool> = (0..m).map(|s| d.orbits.iter().any(|o| o[0] == s)).collect();
    let ind = |s: usize| designated[s] as i64;
    // exponent e_u of the interior power placed at slot u:
    // e_{β(t)} = e_t + [β(t) designated] - [η⁻¹(β(t)) designated]
    let mut e = vec![0i64; m];
    for o in &d.orbits {
        let start = o[0];
        let mut t = start;
        loop {
            let u = pb.apply(t);
            let next = e[t] + ind(u) - ind(pe_inv.apply(u));
            if u == start {
                if next != 0 {
                    return Err(BraidError::NotConsistent);
                }
                break;
            }
            e[u] = next;
            t = u;
        }
    }
    let iota: Vec<BraidWord> = (0..m).map(|s| rf.nontrivial[d.locate(s).0].pow(e[s])).collect();
    let h = d.psi(eta)?.mul(&d.tube_braid(&iota)?);
    let rb = rf.braid()?;
    if !commutes(&h, &rb)? || !nf_equal(&d.project_p(&h)?, eta)? {
        return Err(BraidError::NotConsistent);
    }
    Ok(h)
}

/// Orbits of `β̂` grouped by whether some element of `Z_0` carries one onto another.
pub fn permutability_classes(rf: &RegularForm, z0: &[BraidWord]) -> Vec<Vec<usize>> {
    let d = &rf.decomposition;
    let t = d.orbits.len();
    let mut parent: Vec<usize> = (0..t).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let slot_orbit: Vec<usize> = (0..d.m()).map(|s| d.locate(s).0).collect();
    for g in z0 {
        let p = g.permutation();
        for s in 0..d.m() {
            let (a, b) = (find(&mut parent, slot_orbit[s]), find(&mut parent, slot_orbit[p.apply(s)]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; t];
    for i in 0..t {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(c) => classes[c].push(i),
            None => {
                root_of[r] = Some(classes.len());
                classes.push(vec![i]);
            }
        }
    }
    classes
}
