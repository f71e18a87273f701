//! Shared inputs for the benchmarks.

use braidcent::BraidWord;

/// Deterministic pseudo-random word (xorshift) so benches need no RNG setup.
pub fn sample_word(n: usize, len: usize, seed: u64) -> BraidWord {
    let mut s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        let i = (s % (n as u64 - 1)) as i32 + 1;
        letters.push(if (s >> 32) & 1 == 0 { i } else { -i });
    }
    BraidWord::new(n, letters).expect("letters in range")
}
