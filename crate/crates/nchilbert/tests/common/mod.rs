//! Shared support for the integration suites: a tiny deterministic RNG and
//! the random ideal distributions the acceptance criteria are stated over.

use nchilbert::words::{Var, Word};

/// SplitMix64: fixed, portable randomness so every run sees the same cases.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// A random two-sided monomial input: up to 4 variables, up to 10
/// generators of total degree up to 5.
pub fn random_two_sided_case(case: u64) -> (usize, Vec<Word>) {
    let mut rng = SplitMix64(0xC0FF_EE00 + case.wrapping_mul(0x1234_5677));
    let n = 1 + rng.below(4) as usize;
    let count = 1 + rng.below(10) as usize;
    let gens = (0..count)
        .map(|_| {
            let degree = 1 + rng.below(5) as usize;
            Word::from_letters((0..degree).map(|_| rng.below(n as u64) as Var).collect())
        })
        .collect();
    (n, gens)
}

/// A random right-ideal basis: up to 3 variables, up to 6 words of total
/// degree up to 5 (prefix-reduction happens in the ideal constructor).
pub fn random_right_case(case: u64) -> (usize, Vec<Word>) {
    let mut rng = SplitMix64(0xBEEF_0000 + case.wrapping_mul(0x9E37_79B1));
    let n = 1 + rng.below(3) as usize;
    let count = 1 + rng.below(6) as usize;
    let gens = (0..count)
        .map(|_| {
            let degree = 1 + rng.below(5) as usize;
            Word::from_letters((0..degree).map(|_| rng.below(n as u64) as Var).collect())
        })
        .collect();
    (n, gens)
}

/// Every word of total degree exactly `d` over `n` letters.
pub fn words_of_degree(n: usize, d: u32) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for v in 0..n {
                let mut letters = w.letters().to_vec();
                letters.push(v as Var);
                next.push(Word::from_letters(letters));
            }
        }
        out = next;
    }
    out
}

/// Alphabet names t0.. for ad-hoc requests.
pub fn letters_alphabet(n: usize) -> nchilbert::words::Alphabet {
    nchilbert::words::Alphabet::new((0..n).map(|i| format!("v{i}"))).unwrap()
}
