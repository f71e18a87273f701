mod common;

use braidcent::garside::{Artin, Dual, GarsideStructure, NormalForm};
use braidcent::{bkl_normal_form, commutes, delta_word, nf_equal, normal_form, BraidWord};
use common::*;
use proptest::prelude::*;

fn pair(max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=6).prop_flat_map(move |n| (arb_word(n, max_len), arb_word(n, max_len)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_round_trips(w in arb_sized_word(20)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_left_weighted());
        prop_assert!(nf_equal(&nf.to_word(), &w).unwrap());
        prop_assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn dual_form_agrees_with_classical(w in arb_sized_word(20)) {
        let d = bkl_normal_form(&w);
        prop_assert!(d.is_left_weighted());
        prop_assert!(nf_equal(&d.to_word(), &w).unwrap());
        prop_assert_eq!(bkl_normal_form(&d.to_word()), d);
    }

    #[test]
    fn cancelling_pairs_do_not_matter(w in arb_sized_word(15), pos in any::<prop::sample::Index>(), i in 1i32..5) {
        let n = w.n();
        let i = (i - 1) % (n as i32 - 1) + 1;
        let mut l = w.letters().to_vec();
        let at = pos.index(l.len() + 1);
        l.splice(at..at, [i, -i]);
        let w2 = BraidWord::new(n, l).unwrap();
        let (a, b) = (normal_form(&w), normal_form(&w2));
        prop_assert_eq!((a.inf(), a.canonical_length()), (b.inf(), b.canonical_length()));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn multiplication_and_inverse((u, v) in pair(12)) {
        for_both(&u, &v)?;
    }

    #[test]
    fn full_twist_is_central(w in arb_sized_word(15)) {
        let d2 = delta_word(w.n()).unwrap().pow(2);
        prop_assert!(commutes(&d2, &w).unwrap());
    }

    #[test]
    fn permutation_is_a_homomorphism((u, v) in pair(12)) {
        prop_assert_eq!(u.mul(&v).permutation(), u.permutation().then(&v.permutation()));
    }
}

fn for_both(u: &BraidWord, v: &BraidWord) -> Result<(), TestCaseError> {
    check::<Artin>(Artin::new(u.n()), u, v)?;
    check::<Dual>(Dual::new(u.n()), u, v)
}

fn check<G: GarsideStructure>(g: G, u: &BraidWord, v: &BraidWord) -> Result<(), TestCaseError> {
    let a = NormalForm::from_word(g.clone(), u);
    let b = NormalForm::from_word(g.clone(), v);
    prop_assert_eq!(a.multiply(&b), NormalForm::from_word(g.clone(), &u.mul(v)));
    prop_assert_eq!(a.inverse(), NormalForm::from_word(g.clone(), &u.invert()));
    prop_assert_eq!(a.pow(3), NormalForm::from_word(g.clone(), &u.pow(3)));
    prop_assert_eq!(a.conjugate_by(&b), NormalForm::from_word(g.clone(), &u.conjugate_by(v)));
    for s in g.atoms().into_iter().chain([g.delta_perm().clone()]) {
        let sw = BraidWord::new(u.n(), g.simple_letters(&s)).unwrap();
        prop_assert_eq!(a.conjugate_by_simple(&s), NormalForm::from_word(g.clone(), &u.conjugate_by(&sw)));
    }
    Ok(())
}

#[test]
fn lattice_laws_small() {
    // gcd and lcm agree with the divisibility order on all pairs of simples in B_4
    let g = Artin::new(4);
    let perms: Vec<_> = permutations(4);
    for a in &perms {
        for b in &perms {
            let d = g.gcd(a, b);
            let m = g.lcm(a, b);
            assert!(g.left_divides(&d, a) && g.left_divides(&d, b));
            assert!(g.left_divides(a, &m) && g.left_divides(b, &m));
            for c in &perms {
                if g.left_divides(a, c) && g.left_divides(b, c) {
                    assert!(g.left_divides(&m, c));
                }
            }
        }
    }
}

#[test]
fn dual_lattice_laws_small() {
    let g = Dual::new(5);
    let simples: Vec<_> = permutations(5).into_iter().filter(|p| g.is_simple(p)).collect();
    assert_eq!(simples.len(), 42); // Catalan(5)
    for a in &simples {
        for b in &simples {
            let m = g.lcm(a, b);
            assert!(g.is_simple(&m));
            assert!(g.left_divides(a, &m) && g.left_divides(b, &m));
            // divisibility in the lattice matches divisibility of braids
            let aw = BraidWord::new(5, g.simple_letters(a)).unwrap();
            let mw = BraidWord::new(5, g.simple_letters(&m)).unwrap();
            let rest = bkl_normal_form(&aw.invert().mul(&mw));
            assert!(rest.inf() >= 0);
        }
    }
}

fn permutations(n: usize) -> Vec<braidcent::Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<braidcent::Permutation>) {
    if k <= 1 {
        out.push(braidcent::Permutation::from_images(a).unwrap());
        return;
    }
    for i in 0..k {
        heap(k - 1, a, out);
        if k % 2 == 0 { a.swap(i, k - 1) } else { a.swap(0, k - 1) }
    }
}
