//! Maximal square and maximal k-repeating subsequences of a single string,
//! with brute-force oracles for checking every answer.
//!
//! ```
//! use maxrep::{maximal_k_repeating, maximal_square_subsequence, Seq};
//!
//! let s = Seq::from("abcabcaccabcac");
//! let square = maximal_square_subsequence(&s).unwrap();
//! assert!(square.repeated().is_subsequence_of(&s));
//!
//! let rep = maximal_k_repeating(&Seq::from("abcabcabc"), 3).unwrap();
//! assert_eq!(rep.unit, Seq::from("abc"));
//! ```

pub mod error;
pub mod krep;
pub mod mcs;
pub mod oracle;
pub mod seq;
pub mod square;

pub use error::{Error, Result};
pub use krep::{
    enum_divisions, enum_sigma_starts, extend_k_rep, is_sigma_split_point, maximal_k_repeating,
    maximal_k_repeating_with, Extension, KRepProblem, KRepResult, SigmaStart,
};
pub use mcs::{feasible_insertions, mkcs_constrained, McsInstance, Saturation, Step};
pub use oracle::{
    brute_all_maximal, brute_sigma_starts, check_k_repeating, check_maximal_k_rep, k_fold_witness,
    lss_oracle, unit_of, verify_mcs_output, witness_is_valid, Insertion, MaximalityVerdict,
    McsVerdict,
};
pub use seq::{
    leftmost_embedding, occ_positions, rightmost_embedding, Embedding, OccIndex, Seq, SigmaRule,
    Symbol,
};
pub use square::{
    compute_x1, compute_x2, leftmost_anchor, maximal_square_subsequence,
    maximal_square_subsequence_with, square_pipeline, SquarePipelineState,
};
