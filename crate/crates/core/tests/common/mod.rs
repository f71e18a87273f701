#![allow(dead_code)]
use braidcent::BraidWord;
use proptest::prelude::*;
use rand::Rng;

pub fn word(n: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

/// Random word in `B_n` of the given length.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let k = (n - 1) as i32;
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=k);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

pub fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let k = (n - 1) as i32;
    prop::collection::vec((1..=k, any::<bool>()), 0..=max_len)
        .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).unwrap())
}

pub fn arb_sized_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=6).prop_flat_map(move |n| arb_word(n, max_len))
}
