//! Brute-force verifiers and small-instance enumerators.
//!
//! These are deliberately naive and share no code path with the solvers
//! beyond the `Seq` type. Exhaustive routines refuse instances above a hard
//! size limit instead of running unboundedly.
//!
//! Maximality is decided by single-symbol insertions: if `Y` is a proper
//! k-repeating supersequence of `X`, then some `X'` obtained by inserting
//! one symbol of `Y` into `X` is a subsequence of `Y`, and subsequences of a
//! k-repeating sequence are k-repeating. So `X` is maximal iff no single
//! insertion stays k-repeating.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seq::{is_subsequence, leftmost_embedding, Embedding, Seq, Symbol};

/// Insertion of `symbol` in front of the `gap`-th symbol (0-based gap,
/// `len` meaning the end).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Insertion {
    pub gap: usize,
    pub symbol: Symbol,
}

impl Insertion {
    pub fn apply(&self, x: &[Symbol]) -> Seq {
        let mut v = x.to_vec();
        v.insert(self.gap, self.symbol);
        v.into()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalityVerdict {
    pub is_valid: bool,
    pub is_maximal: bool,
    pub counterexample: Option<Insertion>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McsVerdict {
    pub contains_constraint: bool,
    pub is_common: bool,
    pub is_maximal: bool,
    pub counterexample: Option<Insertion>,
}

impl McsVerdict {
    pub fn accepted(&self) -> bool {
        self.contains_constraint && self.is_common && self.is_maximal
    }
}

/// Greedy k-fold embedding of `x^k` into `s`, copy by copy. On failure the
/// error names the copy and the symbol of `x` (both 1-based) where the
/// greedy match ran out of host.
pub fn k_fold_witness(s: &[Symbol], x: &[Symbol], k: usize) -> Result<Vec<Embedding>> {
    let mut blocks = Vec::with_capacity(k);
    let mut start = 0;
    for copy in 1..=k {
        match leftmost_embedding(x, s, start) {
            Some(e) => {
                start = e.last().unwrap_or(start);
                blocks.push(e);
            }
            None => {
                let position = leftmost_prefix_len(x, s, start) + 1;
                return Err(Error::NotKRepeating { k, copy, position });
            }
        }
    }
    Ok(blocks)
}

fn leftmost_prefix_len(x: &[Symbol], s: &[Symbol], start: usize) -> usize {
    let mut it = s[start.min(s.len())..].iter();
    x.iter().take_while(|p| it.any(|h| h == *p)).count()
}

/// `Some(witness)` iff `x^k ⊆ s`; the witness is the leftmost k-fold
/// embedding.
pub fn check_k_repeating(s: &[Symbol], x: &[Symbol], k: usize) -> Option<Vec<Embedding>> {
    k_fold_witness(s, x, k).ok()
}

/// Checks that `blocks` are k ordered, disjoint embeddings that spell
/// `x^k` inside `s`.
pub fn witness_is_valid(s: &[Symbol], x: &[Symbol], k: usize, blocks: &[Embedding]) -> bool {
    blocks.len() == k
        && blocks.iter().all(|b| b.witnesses(x, s))
        && blocks
            .windows(2)
            .all(|w| match (w[0].last(), w[1].first()) {
                (Some(end), Some(start)) => end < start,
                _ => true,
            })
}

/// `Some(x)` when `candidate` is exactly `x^k`.
pub fn unit_of(candidate: &[Symbol], k: usize) -> Option<Seq> {
    if k == 0 || !candidate.len().is_multiple_of(k) {
        return None;
    }
    let unit = &candidate[..candidate.len() / k];
    candidate
        .chunks(unit.len().max(1))
        .all(|c| c == unit)
        .then(|| Seq::from(unit))
}

fn repeated_is_subsequence<'a>(pattern: impl Iterator<Item = &'a Symbol>, s: &[Symbol]) -> bool {
    let mut it = s.iter();
    pattern.into_iter().all(|p| it.any(|h| h == p))
}

fn is_k_repeating(s: &[Symbol], x: &[Symbol], k: usize) -> bool {
    repeated_is_subsequence(std::iter::repeat_n(x, k).flatten(), s)
}

fn inserted_is_k_repeating(s: &[Symbol], x: &[Symbol], ins: Insertion, k: usize) -> bool {
    let (head, tail) = x.split_at(ins.gap);
    let one = head.iter().chain(std::iter::once(&ins.symbol)).chain(tail);
    repeated_is_subsequence(std::iter::repeat_n(one, k).flatten(), s)
}

fn alphabet(s: &[Symbol]) -> Vec<Symbol> {
    s.iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Single-insertion maximality test. The first counterexample in
/// (gap, symbol) order is reported; an `x` that is not k-repeating gets
/// `is_valid = false`.
pub fn check_maximal_k_rep(s: &[Symbol], x: &[Symbol], k: usize) -> Result<MaximalityVerdict> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    if !is_k_repeating(s, x, k) {
        return Ok(MaximalityVerdict {
            is_valid: false,
            is_maximal: false,
            counterexample: None,
        });
    }
    let symbols = alphabet(s);
    let counterexample = (0..=x.len())
        .flat_map(|gap| symbols.iter().map(move |&symbol| Insertion { gap, symbol }))
        .find(|&ins| inserted_is_k_repeating(s, x, ins, k));
    Ok(MaximalityVerdict {
        is_valid: true,
        is_maximal: counterexample.is_none(),
        counterexample,
    })
}

const MAX_SUBSETS: u128 = 1_000_000;

fn binomial_capped(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > MAX_SUBSETS {
            return acc;
        }
    }
    acc
}

/// All k-subsets of the `sigma` positions that satisfy the σ-start
/// conditions, checked literally window by window.
pub fn brute_sigma_starts(
    s: &[Symbol],
    sigma: Symbol,
    r: usize,
    k: usize,
) -> Result<BTreeSet<Vec<usize>>> {
    let positions: Vec<usize> = (1..=s.len()).filter(|&i| s[i - 1] == sigma).collect();
    let subsets = binomial_capped(positions.len(), k);
    if subsets > MAX_SUBSETS {
        return Err(Error::InstanceTooLarge(format!(
            "C({}, {k}) candidate tuples",
            positions.len()
        )));
    }
    let run: Vec<Symbol> = vec![sigma; r];
    Ok(positions
        .into_iter()
        .combinations(k)
        .filter(|p| {
            let increasing =
                p.windows(2).all(|w| w[0] < w[1]) && p.first().is_some_and(|&f| f >= 1);
            let on_sigma = p.iter().all(|&i| s[i - 1] == sigma);
            let windows = (0..k).all(|j| {
                let end = p.get(j + 1).copied().unwrap_or(s.len() + 1);
                is_subsequence(&run, &s[p[j] - 1..end - 1])
            });
            increasing && on_sigma && windows
        })
        .collect())
}

fn exhaustive_limit(k: usize) -> usize {
    if k <= 2 {
        14
    } else {
        12
    }
}

/// Every maximal k-repeating subsequence of `s`, by enumerating all `2^n`
/// subsequences.
pub fn brute_all_maximal(s: &[Symbol], k: usize) -> Result<BTreeSet<Seq>> {
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    let limit = exhaustive_limit(k);
    if s.len() > limit {
        return Err(Error::InstanceTooLarge(format!(
            "n = {} exceeds {limit} for k = {k}",
            s.len()
        )));
    }
    let n = s.len();
    let repeating: BTreeSet<Vec<Symbol>> = (0u32..1 << n)
        .map(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| s[i])
                .collect::<Vec<_>>()
        })
        .filter(|x| x.len() * k <= n && is_k_repeating(s, x, k))
        .collect();
    Ok(repeating
        .iter()
        .filter(|x| {
            !repeating
                .iter()
                .any(|y| y.len() > x.len() && is_subsequence(x, y))
        })
        .map(|x| Seq::from(x.as_slice()))
        .collect())
}

/// Checks an MCS output: it contains the constraint, it is common to every
/// host, and no single-symbol insertion keeps it common.
pub fn verify_mcs_output(hosts: &[&[Symbol]], constraint: &[Symbol], m: &[Symbol]) -> McsVerdict {
    let contains_constraint = is_subsequence(constraint, m);
    let is_common = hosts.iter().all(|h| is_subsequence(m, h));
    let symbols = hosts.first().map(|h| alphabet(h)).unwrap_or_default();
    let counterexample = if is_common {
        (0..=m.len())
            .flat_map(|gap| symbols.iter().map(move |&symbol| Insertion { gap, symbol }))
            .find(|ins| {
                let grown = ins.apply(m);
                hosts.iter().all(|h| is_subsequence(&grown, h))
            })
    } else {
        None
    };
    McsVerdict {
        contains_constraint,
        is_common,
        is_maximal: is_common && counterexample.is_none(),
        counterexample,
    }
}

const LSS_LIMIT: usize = 600;

fn lcs_len(a: &[Symbol], b: &[Symbol]) -> usize {
    let mut row = vec![0usize; b.len() + 1];
    for &x in a {
        let mut diag = 0;
        for (j, &y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()]
}

/// Length of a longest square subsequence: the best cut point of `s` into
/// a prefix and a suffix, scored by their LCS, doubled.
pub fn lss_oracle(s: &[Symbol]) -> Result<usize> {
    if s.len() > LSS_LIMIT {
        return Err(Error::InstanceTooLarge(format!(
            "n = {} exceeds {LSS_LIMIT}",
            s.len()
        )));
    }
    Ok((0..=s.len())
        .map(|i| 2 * lcs_len(&s[..i], &s[i..]))
        .max()
        .unwrap_or(0))
}
