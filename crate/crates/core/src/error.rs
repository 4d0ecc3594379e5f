use thiserror::Error;

use crate::seq::Symbol;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an MCS instance needs at least one host")]
    NoHosts,
    #[error("constraint is not a subsequence of host {host}")]
    ConstraintNotCommon { host: usize },
    #[error("sequence is not a common subsequence of host {host}")]
    NotCommon { host: usize },
    #[error("gap {gap} is out of range for a sequence of length {len}")]
    GapOutOfRange { gap: usize, len: usize },
    #[error("symbol {symbol} occurs {count} times, at least 2 are required")]
    SymbolTooRare { symbol: Symbol, count: usize },
    #[error("position {position} does not hold the first symbol of the pattern")]
    AnchorMismatch { position: usize },
    #[error("pipeline invariant violated: {0}")]
    PipelineInvariantViolated(&'static str),
    #[error("need {needed} occurrences of the symbol, found {found}")]
    TooFewOccurrences { needed: usize, found: usize },
    #[error("tuple is not strictly increasing or does not sit on the symbol")]
    MalformedTuple,
    #[error(
        "candidate is not {k}-repeating: greedy match fails at copy {copy}, symbol {position}"
    )]
    NotKRepeating {
        k: usize,
        copy: usize,
        position: usize,
    },
    #[error("the split symbol does not occur in the seed")]
    SymbolNotInSeed,
    #[error("the seed must be nonempty")]
    EmptySeed,
    #[error("k must be at least 1, got {0}")]
    InvalidK(usize),
    #[error("instance too large for exhaustive search: {0}")]
    InstanceTooLarge(String),
}
