use super::{GarsideStructure, NormalForm};
use crate::braid::{delta_word, BraidWord};
use crate::error::Result;
use crate::perm::Permutation;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// The classical Garside structure: simples are permutation braids, `Δ` the half twist.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Artin {
    n: usize,
    delta: Permutation,
}

impl Artin {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "need at least one strand");
        Artin { n, delta: Permutation::reversal(n) }
    }

    /// Positions `i` (0-based) where `σ_{i+1}` left-divides `x`.
    pub fn starting_set(x: &Permutation) -> Vec<usize> {
        let r = x.raw();
        (0..r.len().saturating_sub(1)).filter(|&i| r[i] > r[i + 1]).collect()
    }

    /// Positions `i` (0-based) where `σ_{i+1}` right-divides `x`.
    pub fn finishing_set(x: &Permutation) -> Vec<usize> {
        Self::starting_set(&x.inverse())
    }
}

impl GarsideStructure for Artin {
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
        delta_word(self.n).expect("n >= 2")
    }

    fn delta_conj_order(&self) -> i64 {
        2
    }

    fn conj_delta(&self, x: &Permutation, k: i64) -> Permutation {
        if k.rem_euclid(2) == 0 {
            return x.clone();
        }
        let n = self.n;
        let mut out = x.clone();
        let src = x.raw();
        for (i, v) in out.raw_mut().iter_mut().enumerate() {
            *v = (n - 1 - src[n - 1 - i] as usize) as u8;
        }
        out
    }

    fn gcd(&self, a: &Permutation, b: &Permutation) -> Permutation {
        let mut a = a.clone();
        let mut b = b.clone();
        let mut g = Permutation::identity(self.n);
        'outer: loop {
            let (ra, rb) = (a.raw(), b.raw());
            for i in 0..self.n.saturating_sub(1) {
                if ra[i] > ra[i + 1] && rb[i] > rb[i + 1] {
                    a.raw_mut().swap(i, i + 1);
                    b.raw_mut().swap(i, i + 1);
                    // g <- g σ_i : swap the values i, i+1 in g's images
                    for v in g.raw_mut().iter_mut() {
                        if *v as usize == i {
                            *v = (i + 1) as u8;
                        } else if *v as usize == i + 1 {
                            *v = i as u8;
                        }
                    }
                    continue 'outer;
                }
            }
            return g;
        }
    }

    fn lcm(&self, a: &Permutation, b: &Permutation) -> Permutation {
        // ∂ turns left lcm into right gcd; reversal of words inverts permutations
        let ca = self.complement(a);
        let cb = self.complement(b);
        let right_gcd = self.gcd(&ca.inverse(), &cb.inverse()).inverse();
        self.delta.then(&right_gcd.inverse())
    }

    fn atoms(&self) -> Vec<Permutation> {
        (0..self.n.saturating_sub(1)).map(|i| Permutation::adjacent(self.n, i)).collect()
    }

    fn simple_letters(&self, x: &Permutation) -> Vec<i32> {
        let mut at: Vec<u8> = x.raw().to_vec();
        let mut out = Vec::new();
        let mut changed = true;
        while changed {
            changed = false;
            for j in 0..self.n.saturating_sub(1) {
                if at[j] > at[j + 1] {
                    at.swap(j, j + 1);
                    out.push(j as i32 + 1);
                    changed = true;
                }
            }
        }
        out
    }

    fn is_simple(&self, x: &Permutation) -> bool {
        x.n() == self.n
    }
}

pub type GarsideNormalForm = NormalForm<Artin>;

/// Left-greedy normal form in the classical structure.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    NormalForm::from_word(Artin::new(w.n()), w)
}

/// Whether `a` and `b` represent the same braid.
pub fn nf_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_same(b)?;
    let nf = normal_form(&a.invert().mul(b));
    Ok(nf.inf() == 0 && nf.factors().is_empty())
}

/// Whether `ab = ba`.
pub fn commutes(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    a.check_same(b)?;
    let c = a.mul(b).mul(&a.invert()).mul(&b.invert());
    let nf = normal_form(&c);
    Ok(nf.inf() == 0 && nf.factors().is_empty())
}

impl Serialize for NormalForm<Artin> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GarsideNormalForm", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("inf", &self.inf())?;
        st.serialize_field("factors", &self.factors())?;
        st.end()
    }
}
