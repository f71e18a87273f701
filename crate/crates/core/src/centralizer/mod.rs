//! Generating sets for centralizers of braids.

pub mod mixed;
pub mod pa;
pub mod periodic;
pub mod reducible;

pub use mixed::{mixed_group_gens, MixedPartition};
pub use pa::{kth_root_bounded, pa_centralizer_gens, pa_commuting_periodic, CommutingPeriodic};
pub use periodic::{periodic_centralizer_gens, theta_lift};
pub use reducible::{section_h, z0_gens};

use crate::braid::BraidWord;
use crate::classify::{classify, NTClass};
use crate::config::Limits;
use crate::error::{BraidError, Result};
use crate::garside::commutes;
use crate::tubular::{decompose, to_regular_form};
use serde::{Serialize, Serializer};
use std::fmt;

/// Upper bound on the number of generators needed for a centralizer in `B_n`.
pub fn bound_p(n: usize) -> usize {
    let k = n / 2;
    if n % 2 == 0 { k * (k + 1) / 2 } else { k * (k + 3) / 2 }
}

/// Where a generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    /// Centralizer of the interior braid of orbit `i` (1-based), placed in its tubes.
    Interior(usize),
    /// Section of a generator of the tubular group.
    Section,
    /// Lift of a generator of a periodic centralizer.
    PeriodicLift,
    PaRoot,
    PaPeriodic,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Interior(i) => write!(f, "interior({i})"),
            Tag::Section => write!(f, "section"),
            Tag::PeriodicLift => write!(f, "periodic-lift"),
            Tag::PaRoot => write!(f, "pa-root"),
            Tag::PaPeriodic => write!(f, "pa-periodic"),
        }
    }
}

impl Serialize for Tag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub word: BraidWord,
    pub tag: Tag,
}

/// Certified generators of `Z(target)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub target: BraidWord,
    pub gens: Vec<Generator>,
    pub bound: usize,
    /// False when a bounded search (roots, periodic scans, reduction curves) was inconclusive.
    pub complete: bool,
    /// Some search hit a configured cap; the set is a certified partial answer.
    pub exhausted: bool,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn words(&self) -> Vec<BraidWord> {
        self.gens.iter().map(|g| g.word.clone()).collect()
    }

    pub fn within_bound(&self) -> bool {
        self.gens.len() <= self.bound
    }

    /// Re-checks that every generator commutes with the target.
    pub fn verify(&self) -> Result<bool> {
        for g in &self.gens {
            if !commutes(&g.word, &self.target)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `c · g · c⁻¹`, freely reduced.
fn transport(g: &BraidWord, c: &BraidWord) -> BraidWord {
    g.conjugate_by(&c.invert()).free_reduce()
}

fn budget<T>(r: Result<T>, exhausted: &mut bool) -> Result<Option<T>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(BraidError::BudgetExceeded { .. }) => {
            *exhausted = true;
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Generators of the centralizer of `w`, each certified to commute with `w`.
///
/// When a cap is hit the result is still certified but flagged `exhausted` and
/// not `complete`: an unclassified braid gets the root/periodic pair from the
/// dual structure (or `w` itself), and an interior whose centralizer cannot be
/// computed is skipped.
pub fn centralizer_gens(w: &BraidWord, limits: &Limits) -> Result<GeneratorSet> {
    let n = w.n();
    let mut complete = true;
    let mut exhausted = false;
    let class = budget(classify(w, limits), &mut exhausted)?;
    let gens: Vec<Generator> = match class {
        None => match budget(pa_centralizer_gens(w, limits), &mut exhausted)? {
            Some(pa) => vec![
                Generator { word: pa.root, tag: Tag::PaRoot },
                Generator { word: pa.periodic, tag: Tag::PaPeriodic },
            ],
            None => vec![Generator { word: w.clone(), tag: Tag::PaRoot }],
        },
        Some(NTClass::Periodic { kind, k, conjugator }) => periodic_centralizer_gens(kind, n, k)?
            .into_iter()
            .map(|g| Generator { word: transport(&g, &conjugator), tag: Tag::PeriodicLift })
            .collect(),
        Some(NTClass::PseudoAnosov) => {
            let pa = pa_centralizer_gens(w, limits)?;
            complete &= pa.complete;
            vec![Generator { word: pa.root, tag: Tag::PaRoot }, Generator { word: pa.periodic, tag: Tag::PaPeriodic }]
        }
        Some(NTClass::Reducible { reduction, rounding_conjugator, crs_exact }) => {
            complete &= crs_exact;
            let d = decompose(w, &reduction, &rounding_conjugator)?;
            let rf = to_regular_form(&d, limits)?;
            let (z0, z0_complete) = z0_gens(&rf, limits)?;
            complete &= z0_complete;
            let mut out = Vec::new();
            for class in reducible::permutability_classes(&rf, &z0) {
                let i = class[0];
                if rf.decomposition.orbit_size(i) < 2 {
                    continue;
                }
                let sub = centralizer_gens(&rf.nontrivial[i], limits)?;
                complete &= sub.complete;
                exhausted |= sub.exhausted;
                for g in sub.gens {
                    out.push(Generator { word: rf.g_embed(i, &g.word)?, tag: Tag::Interior(i + 1) });
                }
            }
            for eta in &z0 {
                out.push(Generator { word: section_h(&rf, eta)?, tag: Tag::Section });
            }
            for g in &mut out {
                g.word = transport(&g.word, &rf.conjugator);
            }
            out
        }
    };
    complete &= !exhausted;
    for g in &gens {
        if !commutes(&g.word, w)? {
            return Err(BraidError::NotConsistent);
        }
    }
    Ok(GeneratorSet { target: w.clone(), gens, bound: bound_p(n), complete, exhausted })
}
