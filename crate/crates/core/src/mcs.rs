//! Constrained maximal common subsequence of one or more hosts.
//!
//! The result is built by insertion saturation: a cursor walks the gaps of
//! the constraint from left to right, and at each gap the smallest symbol
//! that keeps the sequence common to every host is inserted right after the
//! cursor, until no symbol fits there. Inserting at a later gap never
//! reopens an earlier one (the prefix embedding of an earlier gap is fixed
//! and its suffix embedding can only start further left), so a single pass
//! ends at a sequence with no feasible single-symbol insertion anywhere.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::seq::{is_subsequence, leftmost_embedding, rightmost_embedding, OccIndex, Seq, Symbol};

/// Hosts plus a constraint that is a subsequence of every host.
#[derive(Clone, Debug)]
pub struct McsInstance<'a> {
    hosts: Vec<&'a [Symbol]>,
    constraint: Seq,
}

impl<'a> McsInstance<'a> {
    pub fn new(hosts: Vec<&'a [Symbol]>, constraint: impl Into<Seq>) -> Result<Self> {
        let constraint = constraint.into();
        if hosts.is_empty() {
            return Err(Error::NoHosts);
        }
        if let Some(host) = hosts.iter().position(|h| !is_subsequence(&constraint, h)) {
            return Err(Error::ConstraintNotCommon { host });
        }
        Ok(McsInstance { hosts, constraint })
    }

    pub fn hosts(&self) -> &[&'a [Symbol]] {
        &self.hosts
    }

    pub fn constraint(&self) -> &Seq {
        &self.constraint
    }
}

/// A maximal common subsequence of all hosts that contains the constraint.
/// Deterministic: gaps are scanned left to right, candidate symbols in
/// ascending order.
pub fn mkcs_constrained(instance: &McsInstance<'_>) -> Seq {
    Saturation::new(instance).run()
}

/// Symbols `c` such that `current` with `c` inserted at `gap` (0 = front,
/// `current.len()` = back) is still common to every host.
pub fn feasible_insertions(
    instance: &McsInstance<'_>,
    current: &[Symbol],
    gap: usize,
) -> Result<BTreeSet<Symbol>> {
    if gap > current.len() {
        return Err(Error::GapOutOfRange {
            gap,
            len: current.len(),
        });
    }
    let (head, tail) = current.split_at(gap);
    let mut result: Option<BTreeSet<Symbol>> = None;
    for (h, host) in instance.hosts.iter().enumerate() {
        let not_common = Error::NotCommon { host: h };
        let lo = leftmost_embedding(head, host, 0)
            .ok_or(not_common.clone())?
            .last()
            .unwrap_or(0);
        let hi = rightmost_embedding(tail, host, host.len() + 1)
            .ok_or(not_common.clone())?
            .first()
            .unwrap_or(host.len() + 1);
        if lo >= hi {
            return Err(not_common);
        }
        let window: BTreeSet<Symbol> = host[lo..hi - 1].iter().copied().collect();
        result = Some(match result {
            None => window,
            Some(acc) => acc.intersection(&window).copied().collect(),
        });
    }
    Ok(result.unwrap_or_default())
}

/// One move of the saturation cursor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// `symbol` was inserted at `gap`; the cursor stays in front of it.
    Inserted {
        gap: usize,
        symbol: Symbol,
    },
    /// Nothing fits at the previous gap; the cursor moved to `gap`.
    Advanced {
        gap: usize,
    },
    Finished,
}

/// Incremental insertion-saturation state. Exposed so the single-pass
/// argument can be observed step by step.
#[derive(Clone, Debug)]
pub struct Saturation {
    hosts: Vec<OccIndex>,
    candidates: Vec<Symbol>,
    prefix: Vec<Symbol>,
    // per host: last index of the leftmost embedding of `prefix` (0 if empty)
    prefix_end: Vec<usize>,
    // symbols after the cursor, reversed: the top is the symbol right after it
    suffix: Vec<Symbol>,
    // suffix_start[t][h]: first index of the rightmost embedding of
    // suffix[t], suffix[t - 1], .., suffix[0] in host h
    suffix_start: Vec<Vec<usize>>,
}

impl Saturation {
    pub fn new(instance: &McsInstance<'_>) -> Self {
        let hosts: Vec<OccIndex> = instance.hosts.iter().map(|h| OccIndex::new(h)).collect();
        let mut candidates = hosts[0].alphabet().to_vec();
        candidates.retain(|&c| hosts.iter().all(|h| h.count(c) > 0));

        let mut suffix = Vec::with_capacity(instance.constraint.len());
        let mut suffix_start: Vec<Vec<usize>> = Vec::with_capacity(instance.constraint.len());
        for &c in instance.constraint.iter().rev() {
            let starts = hosts
                .iter()
                .enumerate()
                .map(|(h, idx)| {
                    let bound = suffix_start.last().map_or(idx.len() + 1, |s| s[h]);
                    idx.prev_occurrence(c, bound)
                        .expect("constraint embeds in every host")
                })
                .collect();
            suffix.push(c);
            suffix_start.push(starts);
        }

        let prefix_end = vec![0; hosts.len()];
        Saturation {
            hosts,
            candidates,
            prefix: Vec::new(),
            prefix_end,
            suffix,
            suffix_start,
        }
    }

    /// Number of symbols in front of the cursor.
    pub fn gap(&self) -> usize {
        self.prefix.len()
    }

    pub fn current(&self) -> Seq {
        self.prefix
            .iter()
            .chain(self.suffix.iter().rev())
            .copied()
            .collect()
    }

    fn window(&self, h: usize) -> (usize, usize) {
        let hi = self
            .suffix_start
            .last()
            .map_or(self.hosts[h].len() + 1, |s| s[h]);
        (self.prefix_end[h], hi)
    }

    fn fits(&self, c: Symbol) -> bool {
        (0..self.hosts.len()).all(|h| {
            let (lo, hi) = self.window(h);
            self.hosts[h].next_occurrence(c, lo).is_some_and(|j| j < hi)
        })
    }

    /// Symbols insertable at the cursor, ascending.
    pub fn feasible_here(&self) -> Vec<Symbol> {
        self.candidates
            .iter()
            .copied()
            .filter(|&c| self.fits(c))
            .collect()
    }

    pub fn step(&mut self) -> Step {
        if let Some(c) = self.candidates.iter().copied().find(|&c| self.fits(c)) {
            let starts = (0..self.hosts.len())
                .map(|h| {
                    let (_, hi) = self.window(h);
                    self.hosts[h].prev_occurrence(c, hi).expect("fits")
                })
                .collect();
            self.suffix.push(c);
            self.suffix_start.push(starts);
            return Step::Inserted {
                gap: self.gap(),
                symbol: c,
            };
        }
        let Some(c) = self.suffix.pop() else {
            return Step::Finished;
        };
        self.suffix_start.pop();
        for (h, idx) in self.hosts.iter().enumerate() {
            self.prefix_end[h] = idx
                .next_occurrence(c, self.prefix_end[h])
                .expect("current sequence embeds in every host");
        }
        self.prefix.push(c);
        Step::Advanced { gap: self.gap() }
    }

    pub fn run(mut self) -> Seq {
        while self.step() != Step::Finished {}
        self.prefix.into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Seq {
        Seq::from_text(s)
    }

    fn set(s: &str) -> BTreeSet<Symbol> {
        s.chars().map(Symbol::from).collect()
    }

    #[test]
    fn constraint_must_be_common() {
        let (a, b) = (seq("ab"), seq("ba"));
        let err = McsInstance::new(vec![&a, &b], seq("ab")).unwrap_err();
        assert_eq!(err, Error::ConstraintNotCommon { host: 1 });
        assert_eq!(
            McsInstance::new(vec![], seq("")).unwrap_err(),
            Error::NoHosts
        );
    }

    #[test]
    fn two_host_instance_output_is_valid() {
        let (a, b) = (seq("abcabc"), seq("accabcac"));
        let inst = McsInstance::new(vec![&a, &b], seq("aa")).unwrap();
        let m = mkcs_constrained(&inst);
        assert!(seq("aa").is_subsequence_of(&m));
        assert!(m.is_subsequence_of(&a) && m.is_subsequence_of(&b));
        for gap in 0..=m.len() {
            assert!(feasible_insertions(&inst, &m, gap).unwrap().is_empty());
        }
    }

    #[test]
    fn already_maximal_constraint_is_returned() {
        let (a, b) = (seq("ab"), seq("ab"));
        let inst = McsInstance::new(vec![&a, &b], seq("ab")).unwrap();
        assert_eq!(mkcs_constrained(&inst), seq("ab"));
    }

    #[test]
    fn ties_go_to_the_smallest_symbol() {
        let (a, b) = (seq("ab"), seq("ba"));
        let inst = McsInstance::new(vec![&a, &b], seq("")).unwrap();
        assert_eq!(mkcs_constrained(&inst), seq("a"));
    }

    #[test]
    fn identical_hosts_saturate_to_the_host() {
        let h = seq("cabbage");
        let inst = McsInstance::new(vec![&h, &h, &h], seq("")).unwrap();
        assert_eq!(mkcs_constrained(&inst), h);
    }

    #[test]
    fn feasible_insertion_examples() {
        let (a, b) = (seq("abcabc"), seq("accabcac"));
        let inst = McsInstance::new(vec![&a, &b], seq("aa")).unwrap();
        assert!(feasible_insertions(&inst, &seq("aa"), 1)
            .unwrap()
            .contains(&'c'.into()));

        let (a, b) = (seq("ab"), seq("ab"));
        let inst = McsInstance::new(vec![&a, &b], seq("ab")).unwrap();
        for gap in 0..=2 {
            assert!(feasible_insertions(&inst, &seq("ab"), gap)
                .unwrap()
                .is_empty());
        }

        let (a, b) = (seq("aa"), seq("aa"));
        let inst = McsInstance::new(vec![&a, &b], seq("")).unwrap();
        assert_eq!(feasible_insertions(&inst, &seq("a"), 1).unwrap(), set("a"));
    }

    #[test]
    fn gap_out_of_range() {
        let a = seq("ab");
        let inst = McsInstance::new(vec![&a], seq("")).unwrap();
        assert_eq!(
            feasible_insertions(&inst, &seq("a"), 2).unwrap_err(),
            Error::GapOutOfRange { gap: 2, len: 1 }
        );
        assert_eq!(
            feasible_insertions(&inst, &seq("ba"), 0).unwrap_err(),
            Error::NotCommon { host: 0 }
        );
    }

    #[test]
    fn saturation_steps_report_cursor_moves() {
        let (a, b) = (seq("ab"), seq("ab"));
        let inst = McsInstance::new(vec![&a, &b], seq("")).unwrap();
        let mut sat = Saturation::new(&inst);
        assert_eq!(sat.feasible_here(), vec!['a'.into(), 'b'.into()]);
        assert_eq!(
            sat.step(),
            Step::Inserted {
                gap: 0,
                symbol: 'a'.into()
            }
        );
        assert_eq!(sat.step(), Step::Advanced { gap: 1 });
        assert_eq!(
            sat.step(),
            Step::Inserted {
                gap: 1,
                symbol: 'b'.into()
            }
        );
        assert_eq!(sat.current(), seq("ab"));
        assert_eq!(sat.step(), Step::Advanced { gap: 2 });
        assert_eq!(sat.step(), Step::Finished);
    }
}
