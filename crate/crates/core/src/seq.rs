//! Symbol sequences with 1-based interval views, greedy embeddings and the
//! next/previous-occurrence primitives.
//!
//! Every public index is 1-based. Interval helpers follow the usual
//! closed/open conventions: `closed(i, j)` is `S[i..=j]`, `half_open(i, j)`
//! is `S[i..j)`, `open_closed(i, j)` is `S(i..j]` and `open(i, j)` is
//! `S(i..j)`. An interval whose lower bound exceeds its upper bound is empty.

use std::fmt;
use std::ops::Deref;

use serde::{Serialize, Serializer};

/// A single symbol: a unicode scalar value in text mode, a byte value in
/// byte mode.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn from_char(c: char) -> Self {
        Symbol(c as u32)
    }

    pub fn to_char(self) -> char {
        char::from_u32(self.0).unwrap_or(char::REPLACEMENT_CHARACTER)
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol::from_char(c)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Immutable symbol sequence.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seq(Vec<Symbol>);

impl Seq {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Seq(symbols)
    }

    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    pub fn from_text(text: &str) -> Self {
        text.chars().map(Symbol::from_char).collect()
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        bytes.iter().map(|&b| Symbol(u32::from(b))).collect()
    }

    /// Parses text in which every char is a code point below 256, the
    /// rendering used for byte-mode sequences.
    pub fn from_latin1(text: &str) -> Option<Self> {
        text.chars()
            .map(|c| (u32::from(c) < 256).then_some(Symbol::from_char(c)))
            .collect()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    /// `S[i]`, defined for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> Option<Symbol> {
        i.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    /// `S[i, j]`.
    pub fn closed(&self, i: usize, j: usize) -> &[Symbol] {
        let lo = i.max(1);
        let hi = j.min(self.0.len());
        if lo > hi {
            &[]
        } else {
            &self.0[lo - 1..hi]
        }
    }

    /// `S[i, j)`.
    pub fn half_open(&self, i: usize, j: usize) -> &[Symbol] {
        match j.checked_sub(1) {
            Some(j) => self.closed(i, j),
            None => &[],
        }
    }

    /// `S(i, j]`.
    pub fn open_closed(&self, i: usize, j: usize) -> &[Symbol] {
        self.closed(i + 1, j)
    }

    /// `S(i, j)`.
    pub fn open(&self, i: usize, j: usize) -> &[Symbol] {
        self.half_open(i + 1, j)
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    pub fn repeat(&self, k: usize) -> Seq {
        Seq(self.0.repeat(k))
    }

    pub fn concat(parts: &[&[Symbol]]) -> Seq {
        Seq(parts.concat())
    }

    pub fn is_subsequence_of(&self, host: &[Symbol]) -> bool {
        is_subsequence(&self.0, host)
    }

    /// Renders the sequence as UTF-8 text (byte-mode symbols map to the
    /// code points U+0000..U+00FF).
    pub fn render(&self) -> String {
        self.0.iter().map(|s| s.to_char()).collect()
    }
}

impl Deref for Seq {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<&str> for Seq {
    fn from(text: &str) -> Self {
        Seq::from_text(text)
    }
}

impl From<&[Symbol]> for Seq {
    fn from(symbols: &[Symbol]) -> Self {
        Seq(symbols.to_vec())
    }
}

impl From<Vec<Symbol>> for Seq {
    fn from(symbols: Vec<Symbol>) -> Self {
        Seq(symbols)
    }
}

impl FromIterator<Symbol> for Seq {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Seq(iter.into_iter().collect())
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.render())
    }
}

impl Serialize for Seq {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

/// Strictly increasing, 1-based index list witnessing a pattern inside a
/// host sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Embedding {
    indices: Vec<usize>,
}

impl Embedding {
    pub fn new(indices: Vec<usize>) -> Self {
        Embedding { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn into_indices(self) -> Vec<usize> {
        self.indices
    }

    pub fn pattern_length(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.indices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    /// Checks that the indices are strictly increasing, in range, and spell
    /// `pattern` inside `host`.
    pub fn witnesses(&self, pattern: &[Symbol], host: &[Symbol]) -> bool {
        self.indices.len() == pattern.len()
            && self.indices.windows(2).all(|w| w[0] < w[1])
            && self
                .indices
                .iter()
                .zip(pattern)
                .all(|(&i, &p)| i >= 1 && i <= host.len() && host[i - 1] == p)
    }
}

pub fn is_subsequence(pattern: &[Symbol], host: &[Symbol]) -> bool {
    let mut it = host.iter();
    pattern.iter().all(|p| it.any(|h| h == p))
}

/// Lexicographically smallest embedding of `pattern` into `host(start..]`.
pub fn leftmost_embedding(pattern: &[Symbol], host: &[Symbol], start: usize) -> Option<Embedding> {
    let mut indices = Vec::with_capacity(pattern.len());
    let mut j = start;
    for &p in pattern {
        let offset = host.get(j..)?.iter().position(|&h| h == p)?;
        j += offset + 1;
        indices.push(j);
    }
    Some(Embedding::new(indices))
}

/// Lexicographically largest embedding of `pattern` into `host[1..end)`.
pub fn rightmost_embedding(pattern: &[Symbol], host: &[Symbol], end: usize) -> Option<Embedding> {
    let mut indices = vec![0; pattern.len()];
    let mut j = end.saturating_sub(1).min(host.len());
    for (slot, &p) in indices.iter_mut().zip(pattern).rev() {
        j = host[..j].iter().rposition(|&h| h == p)?;
        *slot = j + 1;
    }
    Some(Embedding::new(indices))
}

/// Ascending 1-based positions of `symbol` in `s`.
pub fn occ_positions(s: &[Symbol], symbol: Symbol) -> Vec<usize> {
    s.iter()
        .enumerate()
        .filter(|&(_, &c)| c == symbol)
        .map(|(i, _)| i + 1)
        .collect()
}

/// How the anchoring symbol σ is picked among symbols occurring at least
/// k times.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SigmaRule {
    /// Smallest symbol with enough occurrences.
    #[default]
    SmallestRepeating,
    /// Most frequent symbol; ties go to the smallest.
    MostFrequent,
}

// Above this many table cells, lookups fall back to binary search.
const TABLE_LIMIT: usize = 1 << 22;

/// Per-symbol occurrence lists plus next/previous-occurrence tables over a
/// fixed sequence.
#[derive(Clone, Debug)]
pub struct OccIndex {
    n: usize,
    alphabet: Vec<Symbol>,
    positions: Vec<Vec<usize>>,
    tables: Option<Tables>,
}

#[derive(Clone, Debug)]
struct Tables {
    // next[i * m + c]: smallest j > i with S[j] = c, or n + 1 (i in 0..=n)
    next: Vec<u32>,
    // prev[i * m + c]: largest l < i with S[l] = c, or 0 (i in 0..=n+1)
    prev: Vec<u32>,
}

impl OccIndex {
    pub fn new(s: &[Symbol]) -> Self {
        Self::build(s, TABLE_LIMIT)
    }

    /// Index that answers every query by binary search over the
    /// occurrence lists, without the dense tables.
    pub fn sparse(s: &[Symbol]) -> Self {
        Self::build(s, 0)
    }

    fn build(s: &[Symbol], table_limit: usize) -> Self {
        let n = s.len();
        let mut alphabet: Vec<Symbol> = s.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let m = alphabet.len();
        let ids: Vec<usize> = s
            .iter()
            .map(|c| alphabet.binary_search(c).expect("symbol in alphabet"))
            .collect();

        let mut positions = vec![Vec::new(); m];
        for (i, &c) in ids.iter().enumerate() {
            positions[c].push(i + 1);
        }

        let tables = ((n + 2).saturating_mul(m.max(1)) <= table_limit && n < u32::MAX as usize)
            .then(|| {
                let mut next = vec![(n + 1) as u32; (n + 1) * m];
                for i in (0..n).rev() {
                    let (head, tail) = next.split_at_mut((i + 1) * m);
                    head[i * m..].copy_from_slice(&tail[..m]);
                    head[i * m + ids[i]] = (i + 1) as u32;
                }
                let mut prev = vec![0u32; (n + 2) * m];
                for i in 2..=n + 1 {
                    let (head, tail) = prev.split_at_mut(i * m);
                    tail[..m].copy_from_slice(&head[(i - 1) * m..]);
                    tail[ids[i - 2]] = (i - 1) as u32;
                }
                Tables { next, prev }
            });

        OccIndex {
            n,
            alphabet,
            positions,
            tables,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Distinct symbols present, ascending.
    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    fn id(&self, symbol: Symbol) -> Option<usize> {
        self.alphabet.binary_search(&symbol).ok()
    }

    pub fn positions(&self, symbol: Symbol) -> &[usize] {
        self.id(symbol).map_or(&[], |c| &self.positions[c])
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.positions(symbol).len()
    }

    /// Most frequent symbol with its count; ties go to the smallest symbol.
    pub fn most_frequent(&self) -> Option<(Symbol, usize)> {
        self.alphabet
            .iter()
            .zip(&self.positions)
            .map(|(&s, p)| (s, p.len()))
            .fold(None, |best, (s, c)| match best {
                Some((_, bc)) if bc >= c => best,
                _ => Some((s, c)),
            })
    }

    /// Picks σ by `rule` among symbols occurring at least `min_count` times.
    pub fn choose_sigma(&self, rule: SigmaRule, min_count: usize) -> Option<(Symbol, usize)> {
        match rule {
            SigmaRule::MostFrequent => self.most_frequent().filter(|&(_, c)| c >= min_count),
            SigmaRule::SmallestRepeating => self
                .alphabet
                .iter()
                .zip(&self.positions)
                .map(|(&s, p)| (s, p.len()))
                .find(|&(_, c)| c >= min_count),
        }
    }

    /// Smallest `j > i` with `S[j] = symbol`.
    pub fn next_occurrence(&self, symbol: Symbol, i: usize) -> Option<usize> {
        let c = self.id(symbol)?;
        if i >= self.n {
            return None;
        }
        let j = match &self.tables {
            Some(t) => t.next[i * self.alphabet.len() + c] as usize,
            None => {
                let p = &self.positions[c];
                p.get(p.partition_point(|&x| x <= i))
                    .copied()
                    .unwrap_or(self.n + 1)
            }
        };
        (j <= self.n).then_some(j)
    }

    /// Largest `l < i` with `S[l] = symbol`.
    pub fn prev_occurrence(&self, symbol: Symbol, i: usize) -> Option<usize> {
        let c = self.id(symbol)?;
        if i <= 1 {
            return None;
        }
        let i = i.min(self.n + 1);
        let l = match &self.tables {
            Some(t) => t.prev[i * self.alphabet.len() + c] as usize,
            None => {
                let p = &self.positions[c];
                match p.partition_point(|&x| x < i) {
                    0 => 0,
                    k => p[k - 1],
                }
            }
        };
        (l > 0).then_some(l)
    }

    /// Smallest `j >= i` such that `S(i..j]` contains `x`; `None` when
    /// `x` does not fit in `S(i..n]`.
    pub fn next_pt(&self, x: &[Symbol], i: usize) -> Option<usize> {
        x.iter().try_fold(i, |j, &c| self.next_occurrence(c, j))
    }

    /// Largest `l <= i` such that `S[l..i)` contains `x`; `None` when `x`
    /// does not fit in `S[1..i)`.
    pub fn prev_pt(&self, x: &[Symbol], i: usize) -> Option<usize> {
        x.iter()
            .rev()
            .try_fold(i, |l, &c| self.prev_occurrence(c, l))
    }
}
