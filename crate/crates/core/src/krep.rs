//! Maximal k-repeating subsequences.
//!
//! A k-repeating seed `X = A·σ·B` (with `A` free of `σ`) is grown into a
//! maximal one by visiting every σ-start for `σ^r`, `r = occ_X(σ)`. At each
//! start that is also a σ-split point for the current `(A, B)`, the suffix
//! `B` is saturated as a maximal common subsequence of the k blocks to the
//! right of the start positions, then the prefix `A` over the k blocks to
//! their left. Starts are streamed from a stars-and-bars enumeration of the
//! `R = occ_S(σ) - k·r` unused occurrences over `k + 1` bins.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mcs::{mkcs_constrained, McsInstance};
use crate::oracle::k_fold_witness;
use crate::seq::{Embedding, OccIndex, Seq, SigmaRule, Symbol};

/// Parameters of one extension run: `occ_S(σ) = k·r + R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KRepProblem {
    pub k: usize,
    pub sigma: Symbol,
    pub r: usize,
    pub unused: usize,
}

impl KRepProblem {
    pub fn new(s: &[Symbol], seed: &[Symbol], sigma: Symbol, k: usize) -> Result<Self> {
        let r = seed.iter().filter(|&&c| c == sigma).count();
        let occ = s.iter().filter(|&&c| c == sigma).count();
        let unused = occ.checked_sub(k * r).ok_or(Error::TooFewOccurrences {
            needed: k * r,
            found: occ,
        })?;
        Ok(KRepProblem {
            k,
            sigma,
            r,
            unused,
        })
    }

    /// Number of σ-starts, `C(R + k, k)`.
    pub fn start_count(&self) -> u128 {
        binomial(self.unused + self.k, self.k)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        0
    } else {
        num_integer::binomial(n as u128, k.min(n - k) as u128)
    }
}

/// Streams every `(d+1)`-tuple of non-negative integers summing to `h`, in
/// lexicographic order (first coordinate ascending, then recursively on the
/// rest). `O(d)` work per tuple.
#[derive(Clone, Debug)]
pub struct Divisions {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

pub fn enum_divisions(h: usize, d: usize) -> Divisions {
    let mut current = vec![0; d + 1];
    current[d] = h;
    Divisions {
        current,
        started: false,
        done: false,
    }
}

impl Divisions {
    fn advance(&mut self) -> bool {
        let d = self.current.len() - 1;
        let mut tail = self.current[d];
        for j in (0..d).rev() {
            if tail > 0 {
                self.current[j] += 1;
                self.current[j + 1..d].iter_mut().for_each(|x| *x = 0);
                self.current[d] = tail - 1;
                return true;
            }
            tail += self.current[j];
        }
        false
    }
}

impl Iterator for Divisions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(self.current.clone())
    }
}

/// k strictly increasing positions of σ whose consecutive windows each hold
/// at least r copies of σ (the last window runs to the end of the string).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SigmaStart(pub Vec<usize>);

impl SigmaStart {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }
}

/// Streaming enumeration of σ-starts over the ascending σ positions.
#[derive(Clone, Debug)]
pub struct SigmaStarts<'a> {
    positions: &'a [usize],
    r: usize,
    divisions: Divisions,
}

pub fn enum_sigma_starts(r: usize, k: usize, positions: &[usize]) -> Result<SigmaStarts<'_>> {
    let needed = k * r;
    if positions.len() < needed {
        return Err(Error::TooFewOccurrences {
            needed,
            found: positions.len(),
        });
    }
    Ok(SigmaStarts {
        positions,
        r,
        divisions: enum_divisions(positions.len() - needed, k),
    })
}

impl Iterator for SigmaStarts<'_> {
    type Item = SigmaStart;

    fn next(&mut self) -> Option<SigmaStart> {
        let slack = self.divisions.next()?;
        let k = slack.len() - 1;
        let mut skipped = 0;
        let start = (0..k)
            .map(|t| {
                skipped += slack[t];
                // 0-based form of I[(t-1)·r + 1 + Σ_{i<=t} slack_i]
                self.positions[t * self.r + skipped]
            })
            .collect();
        Some(SigmaStart(start))
    }
}

/// Whether `p` is a σ-split point for `(a, b)`: every `p_i` has `a` fitting
/// before it and `b` after it, and the `b` of block i ends before the `a` of
/// block i+1 begins.
pub fn is_sigma_split_point(
    index: &OccIndex,
    s: &[Symbol],
    a: &[Symbol],
    b: &[Symbol],
    sigma: Symbol,
    p: &[usize],
) -> Result<bool> {
    let well_formed = p.windows(2).all(|w| w[0] < w[1])
        && p.iter()
            .all(|&i| i >= 1 && i <= s.len() && s[i - 1] == sigma);
    if !well_formed {
        return Err(Error::MalformedTuple);
    }
    let mut prev_next: Option<usize> = None;
    for &pi in p {
        let (Some(after), Some(before)) = (index.next_pt(b, pi), index.prev_pt(a, pi)) else {
            return Ok(false);
        };
        if prev_next.is_some_and(|n| n >= before) {
            return Ok(false);
        }
        prev_next = Some(after);
    }
    Ok(true)
}

/// Result of an extension: the unit is `prefix · sigma · suffix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub prefix: Seq,
    pub sigma: Symbol,
    pub suffix: Seq,
}

impl Extension {
    pub fn unit(&self) -> Seq {
        Seq::concat(&[&self.prefix, &[self.sigma], &self.suffix])
    }
}

/// Grows the k-repeating seed `x` into a maximal k-repeating subsequence
/// of `s` that contains it, splitting `x` at its first `sigma`.
pub fn extend_k_rep(s: &Seq, x: &[Symbol], sigma: Symbol, k: usize) -> Result<Extension> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    if x.is_empty() {
        return Err(Error::EmptySeed);
    }
    let split = x
        .iter()
        .position(|&c| c == sigma)
        .ok_or(Error::SymbolNotInSeed)?;
    k_fold_witness(s, x, k)?;

    let n = s.len();
    let index = OccIndex::new(s);
    let r = x.iter().filter(|&&c| c == sigma).count();
    let mut prefix = Seq::from(&x[..split]);
    let mut suffix = Seq::from(&x[split + 1..]);

    for alpha in enum_sigma_starts(r, k, index.positions(sigma))? {
        let alpha = alpha.positions();
        if !is_sigma_split_point(&index, s, &prefix, &suffix, sigma, alpha)? {
            continue;
        }

        let ends: Vec<usize> = (0..k)
            .map(|i| match alpha.get(i + 1) {
                Some(&next) => index.prev_pt(&prefix, next).expect("split point"),
                None => n + 1,
            })
            .collect();
        let right: Vec<&[Symbol]> = (0..k).map(|i| s.open(alpha[i], ends[i])).collect();
        suffix = mkcs_constrained(&McsInstance::new(right, suffix)?);

        let starts: Vec<usize> = (0..k)
            .map(|i| match i {
                0 => 0,
                _ => index
                    .next_pt(&suffix, alpha[i - 1])
                    .expect("suffix fits its block"),
            })
            .collect();
        let left: Vec<&[Symbol]> = (0..k).map(|i| s.open(starts[i], alpha[i])).collect();
        prefix = mkcs_constrained(&McsInstance::new(left, prefix)?);
    }

    Ok(Extension {
        prefix,
        sigma,
        suffix,
    })
}

/// A k-repeating subsequence with its witness: `witness[i]` embeds the
/// i-th copy of `unit` into the input, blocks in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KRepResult {
    pub k: usize,
    pub sigma: Option<Symbol>,
    pub prefix: Seq,
    pub suffix: Seq,
    pub unit: Seq,
    pub witness: Vec<Embedding>,
}

impl KRepResult {
    pub(crate) fn empty(k: usize) -> Self {
        KRepResult {
            k,
            sigma: None,
            prefix: Seq::empty(),
            suffix: Seq::empty(),
            unit: Seq::empty(),
            witness: vec![Embedding::default(); k],
        }
    }

    /// Wraps `unit` after checking that it contains `sigma` and that
    /// `unit^k` embeds in `s`.
    pub fn from_unit(s: &[Symbol], k: usize, sigma: Symbol, unit: Seq) -> Result<Self> {
        let split =
            unit.iter()
                .position(|&c| c == sigma)
                .ok_or(Error::PipelineInvariantViolated(
                    "result lost the seed symbol",
                ))?;
        let witness = k_fold_witness(s, &unit, k)
            .map_err(|_| Error::PipelineInvariantViolated("result is not k-repeating"))?;
        Ok(KRepResult {
            k,
            sigma: Some(sigma),
            prefix: Seq::from(&unit[..split]),
            suffix: Seq::from(&unit[split + 1..]),
            unit,
            witness,
        })
    }

    /// `unit^k`.
    pub fn repeated(&self) -> Seq {
        self.unit.repeat(self.k)
    }
}

/// One maximal k-repeating subsequence of `s`, seeded with `σ^{⌊ℓ/k⌋}`
/// for the smallest symbol σ occurring `ℓ >= k` times.
pub fn maximal_k_repeating(s: &Seq, k: usize) -> Result<KRepResult> {
    maximal_k_repeating_with(s, k, SigmaRule::default())
}

pub fn maximal_k_repeating_with(s: &Seq, k: usize, rule: SigmaRule) -> Result<KRepResult> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    let index = OccIndex::new(s);
    let Some((sigma, ell)) = index.choose_sigma(rule, k) else {
        return Ok(KRepResult::empty(k));
    };
    if k == 1 {
        return KRepResult::from_unit(s, 1, sigma, s.clone());
    }
    let seed = Seq::new(vec![sigma; ell / k]);
    let ext = extend_k_rep(s, &seed, sigma, k)?;
    KRepResult::from_unit(s, k, sigma, ext.unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::check_maximal_k_rep;

    const S0: &str = "abcabcaccabcac";

    fn seq(s: &str) -> Seq {
        Seq::from_text(s)
    }

    #[test]
    fn divisions_examples() {
        let got: Vec<_> = enum_divisions(1, 2).collect();
        assert_eq!(got, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(enum_divisions(0, 3).collect::<Vec<_>>(), vec![vec![0; 4]]);
        assert_eq!(enum_divisions(2, 0).collect::<Vec<_>>(), vec![vec![2]]);
    }

    #[test]
    fn divisions_count_is_binomial() {
        for h in 0..6 {
            for d in 0..5 {
                let all: Vec<_> = enum_divisions(h, d).collect();
                assert_eq!(all.len() as u128, binomial(h + d, d));
                assert!(all.iter().all(|x| x.iter().sum::<usize>() == h));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn sigma_start_examples() {
        let positions = [1, 4, 7, 10, 13];
        let got: Vec<_> = enum_sigma_starts(2, 2, &positions)
            .unwrap()
            .map(|p| p.0)
            .collect();
        assert_eq!(got, vec![vec![1, 7], vec![1, 10], vec![4, 10]]);
        let got: Vec<_> = enum_sigma_starts(1, 1, &[5])
            .unwrap()
            .map(|p| p.0)
            .collect();
        assert_eq!(got, vec![vec![5]]);
        assert_eq!(
            enum_sigma_starts(3, 2, &positions).unwrap_err(),
            Error::TooFewOccurrences {
                needed: 6,
                found: 5
            }
        );
    }

    #[test]
    fn problem_counts() {
        let p = KRepProblem::new(&seq(S0), &seq("aa"), 'a'.into(), 2).unwrap();
        assert_eq!((p.r, p.unused, p.start_count()), (2, 1, 3));
    }

    #[test]
    fn split_point_examples() {
        let s0 = seq(S0);
        let idx = OccIndex::new(&s0);
        let a: Symbol = 'a'.into();
        assert!(is_sigma_split_point(&idx, &s0, &[], &seq("a"), a, &[1, 7]).unwrap());
        assert!(is_sigma_split_point(&idx, &s0, &[], &[], a, &[1, 4]).unwrap());
        let aa = seq("aa");
        let idx2 = OccIndex::new(&aa);
        assert!(!is_sigma_split_point(&idx2, &aa, &seq("b"), &[], a, &[1, 2]).unwrap());
        assert_eq!(
            is_sigma_split_point(&idx, &s0, &[], &[], a, &[4, 1]),
            Err(Error::MalformedTuple)
        );
        assert_eq!(
            is_sigma_split_point(&idx, &s0, &[], &[], a, &[2]),
            Err(Error::MalformedTuple)
        );
    }

    #[test]
    fn extend_examples() {
        let ext = extend_k_rep(&seq("abcabcabc"), &seq("a"), 'a'.into(), 3).unwrap();
        assert_eq!(ext.unit(), seq("abc"));
        let ext = extend_k_rep(&seq("aaaaa"), &seq("aa"), 'a'.into(), 2).unwrap();
        assert_eq!(ext.unit(), seq("aa"));

        let s0 = seq(S0);
        let ext = extend_k_rep(&s0, &seq("aa"), 'a'.into(), 2).unwrap();
        let w = ext.unit();
        assert!(seq("aa").is_subsequence_of(&w));
        assert!(check_maximal_k_rep(&s0, &w, 2).unwrap().is_maximal);
    }

    #[test]
    fn extend_errors() {
        let s = seq("abab");
        assert_eq!(extend_k_rep(&s, &[], 'a'.into(), 2), Err(Error::EmptySeed));
        assert_eq!(
            extend_k_rep(&s, &seq("b"), 'a'.into(), 2),
            Err(Error::SymbolNotInSeed)
        );
        assert!(matches!(
            extend_k_rep(&s, &seq("ba"), 'a'.into(), 2),
            Err(Error::NotKRepeating { .. })
        ));
        assert_eq!(maximal_k_repeating(&s, 0), Err(Error::InvalidK(0)));
    }

    #[test]
    fn top_level_examples() {
        assert!(maximal_k_repeating(&seq("abc"), 2).unwrap().unit.is_empty());
        assert_eq!(
            maximal_k_repeating(&seq("aaaaa"), 3).unwrap().unit,
            seq("a")
        );
        assert_eq!(
            maximal_k_repeating(&seq("xyzx"), 1).unwrap().unit,
            seq("xyzx")
        );
        let s = seq("xaxbxaxbxaxb");
        let res = maximal_k_repeating(&s, 3).unwrap();
        assert!(seq("xx").is_subsequence_of(&res.unit));
        assert!(check_maximal_k_rep(&s, &res.unit, 3).unwrap().is_maximal);
        assert_eq!(res.witness.len(), 3);
    }
}
