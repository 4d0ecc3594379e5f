use std::path::Path;
use std::time::Instant;

use maxrep::{
    check_maximal_k_rep, maximal_k_repeating, maximal_square_subsequence, witness_is_valid,
    KRepResult, Seq, Symbol,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::Failure;

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Row {
    pub algo: &'static str,
    pub n: usize,
    pub k: usize,
    pub alphabet: u32,
    pub trial: usize,
    pub seed: u64,
    pub elapsed_ms: String,
    pub output_len: usize,
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub alphabet: u32,
    pub trials: usize,
    pub seed: u64,
    pub ks: Vec<usize>,
}

pub fn random_string(seed: u64, n: usize, alphabet: u32) -> Seq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Symbol('a' as u32 + rng.random_range(0..alphabet)))
        .collect()
}

fn timed(f: impl FnOnce() -> maxrep::Result<KRepResult>) -> (f64, Option<KRepResult>) {
    let t = Instant::now();
    let r = f().ok();
    (t.elapsed().as_secs_f64() * 1e3, r)
}

fn verified(s: &Seq, r: &KRepResult) -> bool {
    witness_is_valid(s, &r.unit, r.k, &r.witness)
        && check_maximal_k_rep(s, &r.unit, r.k).is_ok_and(|v| v.is_valid && v.is_maximal)
}

/// Runs every (size, trial) cell, in parallel, and returns the rows in
/// (size, trial, algo) order.
pub fn run(cfg: &BenchConfig) -> Vec<Row> {
    let mut master = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cells: Vec<(usize, usize, u64)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.trials).map(move |t| (n, t)))
        .map(|(n, t)| (n, t, master.random()))
        .collect();
    cells
        .par_iter()
        .map(|&(n, trial, seed)| {
            let s = random_string(seed, n, cfg.alphabet);
            let row = |algo, k, (ms, r): (f64, Option<KRepResult>)| Row {
                algo,
                n,
                k,
                alphabet: cfg.alphabet,
                trial,
                seed,
                elapsed_ms: format!("{ms:.3}"),
                output_len: r.as_ref().map_or(0, |r| r.unit.len() * r.k),
                verified: r.as_ref().is_some_and(|r| verified(&s, r)),
            };
            let mut rows = Vec::with_capacity(1 + cfg.ks.len());
            rows.push(row("mss", 2, timed(|| maximal_square_subsequence(&s))));
            for &k in &cfg.ks {
                rows.push(row("krep", k, timed(|| maximal_k_repeating(&s, k))));
            }
            rows
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn write_csv(path: &Path, rows: &[Row]) -> Result<(), Failure> {
    let fail = |e: csv::Error| Failure::usage(format!("{}: {e}", path.display()));
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(fail)?;
    for row in rows {
        w.serialize(row).map_err(fail)?;
    }
    w.flush()
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}
