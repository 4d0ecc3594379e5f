//! Maximal square subsequence.
//!
//! Starting from `σ^e σ^e` with `e = ⌊ℓ/2⌋`, the half is first grown into
//! `Y` so that `YY` is neither right- nor inner-extendable, then into `Z`
//! so that `ZZ` is not left-extendable either. Each growth step is one
//! constrained MCS over a prefix/suffix split of the input.

use crate::error::{Error, Result};
use crate::krep::KRepResult;
use crate::mcs::{mkcs_constrained, McsInstance};
use crate::seq::{is_subsequence, leftmost_embedding, OccIndex, Seq, SigmaRule, Symbol};

/// Intermediate values of one pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarePipelineState {
    pub sigma: Symbol,
    /// Occurrences of `sigma` in the input.
    pub ell: usize,
    pub e: usize,
    pub sigma_positions: Vec<usize>,
    /// Half of the intermediate square `YY`.
    pub y_half: Seq,
    pub anchors: (usize, Option<usize>),
    /// Half of the final square `ZZ`.
    pub z_half: Seq,
}

fn mcs(hosts: [&[Symbol]; 2], constraint: &[Symbol]) -> Result<Seq> {
    Ok(mkcs_constrained(&McsInstance::new(
        hosts.to_vec(),
        constraint,
    )?))
}

fn sigma_positions(s: &Seq, sigma: Symbol) -> Result<Vec<usize>> {
    let positions = OccIndex::new(s).positions(sigma).to_vec();
    if positions.len() < 2 {
        return Err(Error::SymbolTooRare {
            symbol: sigma,
            count: positions.len(),
        });
    }
    Ok(positions)
}

/// The half `Y` of the first square: contains `σ^e`, starts with `σ`, and
/// `YY` is neither right- nor inner-extendable.
pub fn compute_x1(s: &Seq, sigma: Symbol) -> Result<Seq> {
    let pos = sigma_positions(s, sigma)?;
    let (ell, e) = (pos.len(), pos.len() / 2);
    let n = s.len();
    // pos is 0-based here: pos[t] is i_{t+1}
    let seed = vec![sigma; e];
    let mut y = mcs([s.half_open(pos[0], pos[e]), s.closed(pos[e], n)], &seed)?;
    if ell % 2 == 1 && is_subsequence(&y, s.closed(pos[e + 1], n)) {
        y = mcs(
            [s.half_open(pos[0], pos[e + 1]), s.closed(pos[e + 1], n)],
            &y,
        )?;
    }
    Ok(y)
}

/// Smallest `j` with `y ⊆ S[i, j]`.
pub fn leftmost_anchor(s: &Seq, y: &[Symbol], i: usize) -> Result<Option<usize>> {
    if y.first().is_some_and(|&first| s.at(i) != Some(first)) {
        return Err(Error::AnchorMismatch { position: i });
    }
    Ok(leftmost_embedding(y, s, i.saturating_sub(1)).map(|e| e.last().unwrap_or(i)))
}

fn pipeline_from_y(s: &Seq, y: Seq, sigma: Symbol, pos: Vec<usize>) -> Result<SquarePipelineState> {
    let n = s.len();
    let ell = pos.len();
    let j1 = leftmost_anchor(s, &y, pos[0])?.ok_or(Error::PipelineInvariantViolated(
        "first anchor does not exist",
    ))?;
    let mut z = mcs([s.closed(1, j1), s.open_closed(j1, n)], &y)?;
    let mut j2 = None;
    if ell % 2 == 1 {
        let j = leftmost_anchor(s, &y, pos[1])?.ok_or(Error::PipelineInvariantViolated(
            "second anchor does not exist",
        ))?;
        if is_subsequence(&z, s.open_closed(j, n)) {
            z = mcs([s.closed(1, j), s.open_closed(j, n)], &z)?;
        }
        j2 = Some(j);
    }
    Ok(SquarePipelineState {
        sigma,
        ell,
        e: ell / 2,
        sigma_positions: pos,
        y_half: y,
        anchors: (j1, j2),
        z_half: z,
    })
}

/// The half `Z` of a maximal square that contains `YY`.
pub fn compute_x2(s: &Seq, y: &[Symbol], sigma: Symbol) -> Result<Seq> {
    let pos = sigma_positions(s, sigma)?;
    Ok(pipeline_from_y(s, y.into(), sigma, pos)?.z_half)
}

/// Runs both stages for a chosen `sigma` and keeps every intermediate value.
pub fn square_pipeline(s: &Seq, sigma: Symbol) -> Result<SquarePipelineState> {
    let y = compute_x1(s, sigma)?;
    pipeline_from_y(s, y, sigma, sigma_positions(s, sigma)?)
}

/// A maximal square subsequence `ZZ` of `s`, returned as a 2-repeating
/// result with `unit = Z`. σ is the smallest symbol occurring twice; if
/// nothing repeats the answer is the empty square.
pub fn maximal_square_subsequence(s: &Seq) -> Result<KRepResult> {
    maximal_square_subsequence_with(s, SigmaRule::default())
}

pub fn maximal_square_subsequence_with(s: &Seq, rule: SigmaRule) -> Result<KRepResult> {
    match OccIndex::new(s).choose_sigma(rule, 2) {
        Some((sigma, _)) => {
            let state = square_pipeline(s, sigma)?;
            KRepResult::from_unit(s, 2, sigma, state.z_half)
        }
        None => Ok(KRepResult::empty(2)),
    }
}
