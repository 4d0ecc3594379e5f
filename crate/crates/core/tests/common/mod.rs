#![allow(dead_code)]

use maxrep::{Seq, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const S0: &str = "abcabcaccabcac";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn seq(s: &str) -> Seq {
    Seq::from_text(s)
}

/// Uniform string over the first `alphabet` lowercase letters.
pub fn random_seq(rng: &mut impl Rng, len: usize, alphabet: u32) -> Seq {
    (0..len)
        .map(|_| Symbol('a' as u32 + rng.random_range(0..alphabet)))
        .collect()
}

/// Random subsequence of `s`: each symbol kept with probability `keep`.
pub fn random_subsequence(rng: &mut impl Rng, s: &[Symbol], keep: f64) -> Seq {
    s.iter()
        .copied()
        .filter(|_| rng.random_bool(keep))
        .collect()
}

/// Naive `pattern ⊆ host` by greedy two-pointer scan.
pub fn naive_subseq(pattern: &[Symbol], host: &[Symbol]) -> bool {
    let mut i = 0;
    for &h in host {
        if i < pattern.len() && pattern[i] == h {
            i += 1;
        }
    }
    i == pattern.len()
}

/// All strings over the first `alphabet` letters of length exactly `n`.
pub fn all_strings(n: usize, alphabet: u32) -> Vec<Seq> {
    let total = (alphabet as usize).pow(n as u32);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let c = code % alphabet as usize;
                    code /= alphabet as usize;
                    Symbol('a' as u32 + c as u32)
                })
                .collect()
        })
        .collect()
}

/// Distinct subsequences of `s`, by mask enumeration.
pub fn all_subsequences(s: &[Symbol]) -> Vec<Seq> {
    let n = s.len();
    let mut out: Vec<Seq> = (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| s[i])
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
