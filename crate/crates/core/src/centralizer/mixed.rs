//! Mixed braid groups: braids whose permutation preserves each block of a partition.

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};
use crate::garside::{Artin, GarsideStructure};
use crate::perm::Permutation;
use serde::Serialize;

/// A partition of the strands `1..=k` into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedPartition {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl MixedPartition {
    /// Blocks are sorted internally and ordered by their least element.
    pub fn new(k: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; k + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(BraidError::SizeMismatch("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > k || seen[x] {
                    return Err(BraidError::SizeMismatch(format!("bad or repeated strand {x}")));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(BraidError::SizeMismatch("blocks do not cover every strand".into()));
        }
        blocks.sort();
        Ok(MixedPartition { k, blocks })
    }

    /// Blocks grouping equal labels; `labels[i]` belongs to strand `i + 1`.
    pub fn from_labels<T: PartialEq>(labels: &[T]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<&T> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            match reps.iter().position(|r| *r == l) {
                Some(j) => blocks[j].push(i + 1),
                None => {
                    reps.push(l);
                    blocks.push(vec![i + 1]);
                }
            }
        }
        MixedPartition { k: labels.len(), blocks }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn is_contiguous(&self) -> bool {
        let mut next = 1;
        for b in &self.blocks {
            for &x in b {
                if x != next {
                    return false;
                }
                next += 1;
            }
        }
        true
    }
}

fn run(from: usize, to: usize, sign: i32) -> impl DoubleEndedIterator<Item = i32> {
    (from..to).map(move |i| sign * i as i32)
}

/// Pure generator linking strands `a < b`, in the form `σ_a⋯σ_{b-2} σ_{b-1}² σ_{b-2}⁻¹⋯σ_a⁻¹`,
/// or when `a_form` is set the equal braid `σ_{b-1}⁻¹⋯σ_{a+1}⁻¹ σ_a² σ_{a+1}⋯σ_{b-1}`.
pub(crate) fn pure_generator(k: usize, a: usize, b: usize, a_form: bool) -> BraidWord {
    let mut l: Vec<i32> = Vec::new();
    if a_form {
        l.extend(run(a + 1, b, -1).rev());
        l.extend([a as i32, a as i32]);
        l.extend(run(a + 1, b, 1));
    } else {
        l.extend(run(a, b - 1, 1));
        l.extend([(b - 1) as i32, (b - 1) as i32]);
        l.extend(run(a, b - 1, -1).rev());
    }
    BraidWord::from_raw(k, l)
}

fn contiguous_gens(sizes: &[usize], k: usize, a_form: bool) -> Vec<BraidWord> {
    let mut out = Vec::new();
    let mut starts = Vec::new();
    let mut s = 1;
    for &m in sizes {
        starts.push(s);
        // B_m is generated by σ_first and σ_{first+1}⋯σ_{last-1}
        if m >= 2 {
            out.push(BraidWord::from_raw(k, vec![s as i32]));
        }
        if m >= 3 {
            out.push(BraidWord::from_raw(k, run(s + 1, s + m - 1, 1).collect()));
        }
        s += m;
    }
    for i in 0..sizes.len() {
        for j in i + 1..sizes.len() {
            out.push(pure_generator(k, starts[i] + sizes[i] - 1, starts[j], a_form));
        }
    }
    out
}

/// Positive permutation braid carrying each block, in order, onto consecutive strands.
fn sorting_braid(p: &MixedPartition) -> BraidWord {
    let mut images = vec![0usize; p.k];
    let mut next = 0;
    for b in &p.blocks {
        for &x in b {
            images[x - 1] = next;
            next += 1;
        }
    }
    let perm = Permutation::from_images(&images).expect("blocks cover all strands");
    let letters = if p.k >= 2 { Artin::new(p.k).simple_letters(&perm) } else { Vec::new() };
    BraidWord::from_raw(p.k, letters)
}

pub(crate) fn mixed_group_gens_form(p: &MixedPartition, a_form: bool) -> Vec<BraidWord> {
    let sizes: Vec<usize> = p.blocks.iter().map(Vec::len).collect();
    let gens = contiguous_gens(&sizes, p.k, a_form);
    if p.is_contiguous() {
        return gens;
    }
    // s · g · s⁻¹ preserves the original blocks when s sends them to consecutive strands
    let s = sorting_braid(p);
    gens.into_iter().map(|g| g.conjugate_by(&s.invert())).collect()
}

/// Generators of the mixed braid group of `p`: two per block of size ≥ 3, one per block
/// of size 2, and one pure generator per pair of blocks.
pub fn mixed_group_gens(p: &MixedPartition) -> Vec<BraidWord> {
    mixed_group_gens_form(p, false)
}
