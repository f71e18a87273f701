mod common;

use braidcent::cable::arrival_sizes;
use braidcent::curves::RoundMulticurve;
use braidcent::tubular::{decompose, to_regular_form};
use braidcent::{cable, commutes, nf_equal, normal_form, BraidWord, CablePattern, Limits};
use common::{random_word, word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn system_of(pat: &CablePattern) -> RoundMulticurve {
    let offs = pat.offsets();
    let iv = pat.sizes.iter().zip(offs).filter(|(s, _)| **s >= 2).map(|(s, o)| (o + 1, o + s)).collect();
    RoundMulticurve::new(pat.total(), iv).unwrap()
}

fn trivial(x: &BraidWord) -> bool {
    normal_form(x).to_word().is_empty()
}

// Random size-consistent cable on the given pattern.
fn random_cable<R: Rng>(rng: &mut R, pat: &CablePattern, len: usize) -> (BraidWord, BraidWord, Vec<BraidWord>) {
    loop {
        let tub = random_word(rng, pat.sizes.len(), len);
        if arrival_sizes(&tub, pat) != pat.sizes {
            continue;
        }
        let ints: Vec<BraidWord> =
            pat.sizes.iter().map(|&s| if s >= 2 { random_word(rng, s, 3) } else { BraidWord::identity(1) }).collect();
        return (cable(&tub, pat, &ints).unwrap(), tub, ints);
    }
}

#[test]
fn thirteen_strand_roundtrip() {
    let tub = word(6, &[3, 3, 2, 1, 5, 5, 4]);
    let pat = CablePattern::new(vec![2, 2, 2, 3, 3, 1]).unwrap();
    let fin = arrival_sizes(&tub, &pat);
    let ints: Vec<BraidWord> = fin
        .iter()
        .enumerate()
        .map(|(j, &s)| match (s, j % 2) {
            (1, _) => BraidWord::identity(1),
            (2, 0) => word(2, &[1, 1, 1]),
            (2, _) => word(2, &[-1]),
            (_, 0) => word(3, &[1, -2]),
            _ => word(3, &[2, 2, 1]),
        })
        .collect();
    let b = cable(&tub, &pat, &ints).unwrap();
    assert_eq!(b.n(), 13);
    let d = decompose(&b, &system_of(&pat), &BraidWord::identity(13)).unwrap();
    assert!(nf_equal(&d.tubular, &tub).unwrap());
    for (x, y) in d.interiors.iter().zip(&ints) {
        assert!(nf_equal(x, y).unwrap());
    }
    let total: usize = d.orbits.iter().map(|o| o.len() * d.sizes[o[0]]).sum();
    assert_eq!(total, 13);
    assert!(nf_equal(&d.project_p(&b).unwrap(), &tub).unwrap());
}

#[test]
fn random_cables_roundtrip_and_regularize() {
    let lim = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for sizes in [vec![2, 2, 1], vec![2, 1, 2, 1], vec![3, 3], vec![2, 2, 2], vec![1, 3, 1, 3]] {
        let pat = CablePattern::new(sizes).unwrap();
        for _ in 0..6 {
            let (b, tub, ints) = random_cable(&mut rng, &pat, 4);
            let d = decompose(&b, &system_of(&pat), &BraidWord::identity(b.n())).unwrap();
            assert!(nf_equal(&d.tubular, &tub).unwrap());
            for (x, y) in d.interiors.iter().zip(&ints) {
                assert!(nf_equal(x, y).unwrap());
            }
            let r = to_regular_form(&d, &lim).unwrap();
            let rb = r.braid().unwrap();
            assert!(nf_equal(&b.conjugate_by(&r.conjugator), &rb).unwrap());
            for (i, o) in r.decomposition.orbits.iter().enumerate() {
                let xs = r.decomposition.orbit_interiors(i);
                assert!(xs[..o.len() - 1].iter().all(trivial));
                assert!(nf_equal(&xs[o.len() - 1], &r.nontrivial[i]).unwrap());
            }
            // equal or non-conjugate
            for i in 0..r.nontrivial.len() {
                for j in 0..i {
                    let (x, y) = (&r.nontrivial[i], &r.nontrivial[j]);
                    if x.n() == y.n() && x != y {
                        assert!(braidcent::sss::are_conjugate(x, y, &lim).unwrap().is_none());
                    }
                }
            }
            // g_embed lands in the centralizer and different orbits commute
            let gens: Vec<BraidWord> = (0..r.nontrivial.len())
                .map(|i| r.g_embed(i, &r.nontrivial[i]).unwrap())
                .collect();
            for (i, g) in gens.iter().enumerate() {
                assert!(commutes(g, &rb).unwrap());
                assert!(trivial(&r.project_p(g).unwrap()));
                for h in &gens[..i] {
                    assert!(commutes(g, h).unwrap());
                }
            }
        }
    }
}

#[test]
fn conjugate_interiors_are_equalized() {
    let pat = CablePattern::new(vec![3, 3]).unwrap();
    let b = cable(&BraidWord::identity(2), &pat, &[word(3, &[1]), word(3, &[2, 1, -2])]).unwrap();
    let d = decompose(&b, &system_of(&pat), &BraidWord::identity(6)).unwrap();
    let r = to_regular_form(&d, &Limits::default()).unwrap();
    assert_eq!(r.nontrivial[0], r.nontrivial[1]);
    assert!(nf_equal(&b.conjugate_by(&r.conjugator), &r.braid().unwrap()).unwrap());
}

#[test]
fn projection_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let pat = CablePattern::new(vec![2, 2, 1]).unwrap();
    let (b, _, _) = random_cable(&mut rng, &pat, 3);
    let d = decompose(&b, &system_of(&pat), &BraidWord::identity(5)).unwrap();
    for _ in 0..20 {
        let (x, tx, _) = random_cable(&mut rng, &pat, 5);
        let (y, ty, _) = random_cable(&mut rng, &pat, 5);
        let p = d.project_p(&x.mul(&y)).unwrap();
        assert!(nf_equal(&p, &tx.mul(&ty)).unwrap());
        assert!(nf_equal(&d.project_p(&d.psi(&tx).unwrap()).unwrap(), &tx).unwrap());
    }
}

#[test]
fn trivial_tubular_part_is_in_the_image_of_g() {
    // an element of Z(β) with trivial tubular part has γ_i ∈ Z(β_[i]) in every tube of orbit i
    let pat = CablePattern::new(vec![2, 2, 2]).unwrap();
    let b = cable(&word(3, &[1, 2]), &pat, &[word(2, &[1]), BraidWord::identity(2), BraidWord::identity(2)]).unwrap();
    let d = decompose(&b, &system_of(&pat), &BraidWord::identity(6)).unwrap();
    let r = to_regular_form(&d, &Limits::default()).unwrap();
    let rb = r.braid().unwrap();
    let z = r.g_embed(0, &word(2, &[-1, -1, -1])).unwrap();
    assert!(commutes(&z, &rb).unwrap());
    let (t, ints) = r.decomposition.split_preserving(&z).unwrap();
    assert!(trivial(&t));
    for &s in &r.decomposition.orbits[0] {
        assert!(nf_equal(&ints[s], &word(2, &[-1, -1, -1])).unwrap());
    }
    assert!(r.g_embed(0, &word(2, &[])).is_ok());
    let p3 = CablePattern::new(vec![3, 1]).unwrap();
    let b3 = cable(&BraidWord::identity(2), &p3, &[word(3, &[1]), BraidWord::identity(1)]).unwrap();
    let r3 = to_regular_form(&decompose(&b3, &system_of(&p3), &BraidWord::identity(4)).unwrap(), &Limits::default()).unwrap();
    assert_eq!(r3.g_embed(0, &word(3, &[2])), Err(braidcent::BraidError::NotInCentralizerOfInterior));
}
