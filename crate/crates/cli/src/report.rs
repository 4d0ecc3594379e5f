use maxrep::{check_maximal_k_rep, witness_is_valid, Embedding, KRepResult, Seq};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

/// Outcome of one `mss` or `krep` run. `result` is the subsequence itself
/// (`unit^k`) for `mss` and the unit for `krep`; `unit` is always present.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub byte_mode: bool,
    pub input_length: usize,
    pub k: usize,
    pub sigma: Option<String>,
    pub result: String,
    pub unit: String,
    pub result_length: usize,
    pub witness: Vec<Vec<usize>>,
    pub verified: bool,
    pub maximal: Option<bool>,
    pub elapsed_ms: f64,
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn new(command: &str, s: &Seq, r: &KRepResult, byte_mode: bool, elapsed_ms: f64) -> Self {
        let repeated = r.repeated();
        let result = if command == "mss" { &repeated } else { &r.unit };
        RunReport {
            schema: SCHEMA,
            command: command.to_owned(),
            byte_mode,
            input_length: s.len(),
            k: r.k,
            sigma: r.sigma.map(|c| c.to_string()),
            result: result.render(),
            unit: r.unit.render(),
            result_length: result.len(),
            witness: r.witness.iter().map(|e| e.indices().to_vec()).collect(),
            verified: witness_is_valid(s, &r.unit, r.k, &r.witness),
            maximal: None,
            elapsed_ms,
            seed: None,
        }
    }

    /// Adds the maximality check; `verified` then requires it.
    pub fn check_maximal(&mut self, s: &Seq, unit: &Seq) {
        let maximal =
            check_maximal_k_rep(s, unit, self.k).is_ok_and(|v| v.is_valid && v.is_maximal);
        self.maximal = Some(maximal);
        self.verified &= maximal;
    }

    pub fn witness(&self) -> Vec<Embedding> {
        self.witness.iter().cloned().map(Embedding::new).collect()
    }

    pub fn print_text(&self) {
        crate::say!("result\t{}", self.result);
        crate::say!("unit\t{}", self.unit);
        crate::say!("length\t{}", self.result_length);
        crate::say!("k\t{}", self.k);
        crate::say!("sigma\t{}", self.sigma.as_deref().unwrap_or("-"));
        crate::say!("verified\t{}", self.verified);
        if let Some(m) = self.maximal {
            crate::say!("maximal\t{m}");
        }
        crate::say!("elapsed_ms\t{:.3}", self.elapsed_ms);
    }
}
