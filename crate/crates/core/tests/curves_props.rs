mod common;

use braidcent::curves::{act, encode_interval_curve, essential_intervals, invariant_round_systems, is_invariant, round_images};
use braidcent::{BraidWord, Limits};
use common::random_word;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// Free group words: nonzero i32, sign is the exponent of x_|g|.
type FWord = Vec<i32>;

fn reduce(w: &[i32]) -> FWord {
    let mut out: FWord = Vec::new();
    for &g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> FWord {
    let mut v = reduce(w);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v = v[1..v.len() - 1].to_vec();
    }
    v
}

fn inv(w: &[i32]) -> FWord {
    w.iter().rev().map(|g| -g).collect()
}

fn same_class(a: &[i32], b: &[i32]) -> bool {
    let a = cyclic_reduce(a);
    let b = cyclic_reduce(b);
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let doubled: FWord = a.iter().chain(a.iter()).copied().collect();
    let hit = |t: &FWord| doubled.windows(t.len()).any(|s| s == t.as_slice());
    hit(&b) || hit(&inv(&b))
}

// Image of a generator under the automorphism for one braid letter.
fn subst(e: i32, g: i32) -> FWord {
    let i = e.abs();
    let x = g.abs();
    let img: FWord = if e > 0 {
        if x == i {
            vec![i, i + 1, -i]
        } else if x == i + 1 {
            vec![i]
        } else {
            vec![x]
        }
    } else if x == i {
        vec![i + 1]
    } else if x == i + 1 {
        vec![-(i + 1), i, i + 1]
    } else {
        vec![x]
    };
    if g > 0 { img } else { inv(&img) }
}

fn image(w: &BraidWord, word: &[i32]) -> FWord {
    let mut cur = word.to_vec();
    for &e in w.letters() {
        cur = reduce(&cur.iter().flat_map(|&g| subst(e, g)).collect::<Vec<_>>());
    }
    cur
}

fn loop_word((p, q): (usize, usize)) -> FWord {
    (p as i32..=q as i32).collect()
}

fn check_round_images(w: &BraidWord) {
    let n = w.n();
    let cat = essential_intervals(n);
    for (iv, got) in round_images(w).unwrap() {
        let img = image(w, &loop_word(iv));
        let want = cat.iter().copied().find(|&j| same_class(&img, &loop_word(j)));
        assert_eq!(got, want, "{w} on {iv:?}");
    }
}

#[test]
fn round_images_match_free_group_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=6 {
        for len in [1, 2, 3, 6, 10] {
            for _ in 0..20 {
                check_round_images(&random_word(&mut rng, n, len));
            }
        }
    }
    // words that fix lots of curves
    for s in ["B4: 1 3 3", "B5: 3 4 2 3 1 2 2 3 4 1 2 3", "B6: 1 2 1 2 1 2 4 5 4 5", "B5: 1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4 1 2 3 4"] {
        check_round_images(&BraidWord::parse(s).unwrap());
    }
}

#[test]
fn encoding_is_injective() {
    for n in 3..=6 {
        let cat = essential_intervals(n);
        let mut seen = std::collections::HashSet::new();
        for iv in &cat {
            assert!(seen.insert(encode_interval_curve(n, *iv).unwrap()));
        }
    }
}

#[test]
fn enumerated_systems_are_invariant() {
    let lim = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 3..=6 {
        for _ in 0..20 {
            let w = random_word(&mut rng, n, 4);
            let sq = w.mul(&w);
            for s in invariant_round_systems(&sq, &lim).unwrap() {
                assert!(is_invariant(&sq, &s).unwrap());
            }
        }
    }
}

proptest! {
    #[test]
    fn action_composes(seed in 0u64..1000, n in 3usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_word(&mut rng, n, 8);
        let v = random_word(&mut rng, n, 8);
        for iv in essential_intervals(n) {
            let x = encode_interval_curve(n, iv).unwrap();
            prop_assert_eq!(act(&u.mul(&v), &x).unwrap(), act(&v, &act(&u, &x).unwrap()).unwrap());
            prop_assert_eq!(act(&u.invert(), &act(&u, &x).unwrap()).unwrap(), x);
        }
    }

    #[test]
    fn action_respects_braid_relations(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 6;
        let w = random_word(&mut rng, n, 5);
        let x = act(&w, &encode_interval_curve(n, (2, 4)).unwrap()).unwrap();
        let rel = BraidWord::parse("B6: 2 3 2 -3 -2 -3 1 4 -1 -4").unwrap();
        prop_assert_eq!(act(&rel, &x).unwrap(), x);
    }
}
