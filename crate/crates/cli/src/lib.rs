//! Command-line front end for the `maxrep` library.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 on usage or
//! input errors.

pub mod bench;
pub mod input;
pub mod report;

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxrep::krep::binomial;
use maxrep::{
    check_maximal_k_rep, enum_sigma_starts, extend_k_rep, maximal_k_repeating_with,
    maximal_square_subsequence_with, unit_of, verify_mcs_output, witness_is_valid, Error,
    KRepResult, MaximalityVerdict, OccIndex, Seq, SigmaRule, Symbol,
};
use serde_json::json;

use input::{parse_seq, parse_symbol, InputArgs};
use report::{RunReport, SCHEMA};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// `println!` that treats a closed stdout as success.
#[macro_export]
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PipelineInvariantViolated(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "maxrep",
    version,
    about = "Maximal square and k-repeating subsequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Maximal square subsequence.
    Mss(MssArgs),
    /// Maximal k-repeating subsequence, optionally containing a given one.
    Krep(KrepArgs),
    /// List the sigma-starts of an input.
    EnumStarts(EnumArgs),
    /// Check a candidate answer with the brute-force oracles.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Time both algorithms on seeded random strings and write a CSV.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
pub enum RuleArg {
    /// Smallest symbol occurring often enough.
    #[default]
    Smallest,
    /// Most frequent symbol, smallest on ties.
    MostFrequent,
}

impl From<RuleArg> for SigmaRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Smallest => SigmaRule::SmallestRepeating,
            RuleArg::MostFrequent => SigmaRule::MostFrequent,
        }
    }
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Also run the maximality oracle on the answer.
    #[arg(long)]
    pub verify: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// How the split symbol is chosen.
    #[arg(long, value_enum, default_value_t)]
    pub sigma_rule: RuleArg,
}

#[derive(Args, Debug)]
pub struct MssArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct KrepArgs {
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// A k-repeating subsequence the answer must contain.
    #[arg(long, allow_hyphen_values = true)]
    pub constraint: Option<String>,
    /// Split symbol (default: most frequent in the constraint).
    #[arg(long)]
    pub sigma: Option<String>,
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct EnumArgs {
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub r: u64,
    #[arg(long)]
    pub sigma: String,
    /// Print only the count next to its binomial.
    #[arg(long)]
    pub count_only: bool,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Is the candidate a maximal k-repeating subsequence of the input?
    Krep(VerifyKrepArgs),
    /// Is the candidate a maximal common subsequence containing the constraint?
    Mcs(VerifyMcsArgs),
    /// Re-check a JSON report from `mss` or `krep` against its input.
    Report(VerifyReportArgs),
}

#[derive(Args, Debug)]
pub struct VerifyKrepArgs {
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    /// The full k-fold candidate `X^k`.
    #[arg(
        long,
        conflicts_with = "unit",
        required_unless_present = "unit",
        allow_hyphen_values = true
    )]
    pub candidate: Option<String>,
    /// The candidate unit `X`.
    #[arg(long, allow_hyphen_values = true)]
    pub unit: Option<String>,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyMcsArgs {
    /// Comma-separated hosts.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub hosts: Vec<String>,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub constraint: String,
    #[arg(long, allow_hyphen_values = true)]
    pub candidate: String,
    #[arg(long)]
    pub bytes: bool,
}

#[derive(Args, Debug)]
pub struct VerifyReportArgs {
    /// JSON report written by `mss --json` or `krep --json`.
    #[arg(long, value_name = "FILE")]
    pub report: PathBuf,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub alphabet: u32,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long)]
    pub seed: u64,
    /// k values for the krep rows.
    #[arg(short, long = "k", value_delimiter = ',', default_value = "3")]
    pub ks: Vec<usize>,
    #[arg(long, value_name = "PATH")]
    pub csv: PathBuf,
}

pub fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Mss(a) => run_mss(a),
        Command::Krep(a) => run_krep(a),
        Command::EnumStarts(a) => run_enum(a),
        Command::Verify(VerifyCommand::Krep(a)) => verify_krep(a),
        Command::Verify(VerifyCommand::Mcs(a)) => verify_mcs(a),
        Command::Verify(VerifyCommand::Report(a)) => verify_report(a),
        Command::Bench(a) => run_bench(a),
    }
}

fn emit(
    command: &str,
    s: &Seq,
    r: &KRepResult,
    byte_mode: bool,
    ms: f64,
    out: &OutputArgs,
) -> Result<u8, Failure> {
    let mut report = RunReport::new(command, s, r, byte_mode, ms);
    if out.verify {
        report.check_maximal(s, &r.unit);
    }
    if out.json {
        say!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        report.print_text();
    }
    Ok(if report.verified { 0 } else { 1 })
}

fn millis(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn run_mss(a: MssArgs) -> Result<u8, Failure> {
    let byte_mode = a.input.byte_mode();
    let s = a.input.read()?;
    let t = Instant::now();
    let r = maximal_square_subsequence_with(&s, a.output.sigma_rule.into())?;
    let ms = millis(t);
    emit("mss", &s, &r, byte_mode, ms, &a.output)
}

fn most_frequent(x: &Seq) -> Option<Symbol> {
    OccIndex::new(x).most_frequent().map(|(c, _)| c)
}

fn run_krep(a: KrepArgs) -> Result<u8, Failure> {
    let byte_mode = a.input.byte_mode();
    let s = a.input.read()?;
    let k = a.k as usize;
    let sigma = a
        .sigma
        .as_deref()
        .map(|c| parse_symbol(c, byte_mode))
        .transpose()?;
    let seed = match &a.constraint {
        Some(c) => {
            let x = parse_seq(c, byte_mode)?;
            let sigma = sigma
                .or_else(|| most_frequent(&x))
                .ok_or(Error::EmptySeed)?;
            Some((x, sigma))
        }
        None => sigma.map(|c| (Seq::new(vec![c; s.count(c) / k]), c)),
    };

    let t = Instant::now();
    let r = match seed {
        Some((x, sigma)) if x.is_empty() => {
            return Err(Error::TooFewOccurrences {
                needed: k,
                found: s.count(sigma),
            }
            .into())
        }
        Some((_, sigma)) if k == 1 => KRepResult::from_unit(&s, 1, sigma, s.clone())?,
        Some((x, sigma)) => {
            let ext = extend_k_rep(&s, &x, sigma, k)?;
            KRepResult::from_unit(&s, k, sigma, ext.unit())?
        }
        None => maximal_k_repeating_with(&s, k, a.output.sigma_rule.into())?,
    };
    let ms = millis(t);
    emit("krep", &s, &r, byte_mode, ms, &a.output)
}

fn run_enum(a: EnumArgs) -> Result<u8, Failure> {
    let byte_mode = a.input.byte_mode();
    let s = a.input.read()?;
    let sigma = parse_symbol(&a.sigma, byte_mode)?;
    let (k, r) = (a.k as usize, a.r as usize);
    let index = OccIndex::new(&s);
    let positions = index.positions(sigma);
    let starts = enum_sigma_starts(r, k, positions)?;
    if a.count_only {
        let unused = positions.len() - k * r;
        let count = starts.count();
        let expected = binomial(unused + k, k);
        let rel = if count as u128 == expected { "=" } else { "!=" };
        say!("{count} {rel} C({},{k})", unused + k);
        return Ok(if rel == "=" { 0 } else { 1 });
    }
    for start in starts {
        let parts: Vec<String> = start.positions().iter().map(usize::to_string).collect();
        say!("({})", parts.join(","));
    }
    Ok(0)
}

fn verdict_code(v: &MaximalityVerdict) -> u8 {
    if v.is_valid && v.is_maximal {
        0
    } else {
        1
    }
}

fn verify_krep(a: VerifyKrepArgs) -> Result<u8, Failure> {
    let byte_mode = a.input.byte_mode();
    let s = a.input.read()?;
    let k = a.k as usize;
    let unit = match (&a.unit, &a.candidate) {
        (Some(u), _) => Some(parse_seq(u, byte_mode)?),
        (None, Some(c)) => unit_of(&parse_seq(c, byte_mode)?, k),
        (None, None) => unreachable!("clap requires one of them"),
    };
    let v = match &unit {
        Some(u) => check_maximal_k_rep(&s, u, k)?,
        None => MaximalityVerdict {
            is_valid: false,
            is_maximal: false,
            counterexample: None,
        },
    };
    let out = json!({
        "schema": SCHEMA,
        "mode": "krep",
        "k": k,
        "unit": unit,
        "is_valid": v.is_valid,
        "is_maximal": v.is_maximal,
        "counterexample": v.counterexample,
    });
    say!(
        "{}",
        serde_json::to_string_pretty(&out).expect("verdict serializes")
    );
    Ok(verdict_code(&v))
}

fn verify_mcs(a: VerifyMcsArgs) -> Result<u8, Failure> {
    let byte_mode = a.bytes || std::env::var("MAXREP_BYTE_MODE").is_ok_and(|v| v == "1");
    let hosts = a
        .hosts
        .iter()
        .map(|h| parse_seq(h, byte_mode))
        .collect::<Result<Vec<_>, _>>()?;
    let constraint = parse_seq(&a.constraint, byte_mode)?;
    let candidate = parse_seq(&a.candidate, byte_mode)?;
    let refs: Vec<&[Symbol]> = hosts.iter().map(|h| &h[..]).collect();
    let v = verify_mcs_output(&refs, &constraint, &candidate);
    let out = json!({
        "schema": SCHEMA,
        "mode": "mcs",
        "is_valid": v.contains_constraint && v.is_common,
        "is_maximal": v.is_maximal,
        "contains_constraint": v.contains_constraint,
        "is_common": v.is_common,
        "counterexample": v.counterexample,
    });
    say!(
        "{}",
        serde_json::to_string_pretty(&out).expect("verdict serializes")
    );
    Ok(if v.accepted() { 0 } else { 1 })
}

fn verify_report(a: VerifyReportArgs) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(&a.report)
        .map_err(|e| Failure::usage(format!("{}: {e}", a.report.display())))?;
    let report: RunReport = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("{}: {e}", a.report.display())))?;
    if report.schema != SCHEMA {
        return Err(Failure::usage(format!(
            "unsupported schema {}",
            report.schema
        )));
    }
    let s = a.input.read_as(report.byte_mode)?;
    let unit = parse_seq(&report.unit, report.byte_mode)?;
    let result = parse_seq(&report.result, report.byte_mode)?;
    let k = report.k;
    let expected_result = if report.command == "mss" {
        unit.repeat(k)
    } else {
        unit.clone()
    };

    let witness_valid = s.len() == report.input_length
        && result == expected_result
        && witness_is_valid(&s, &unit, k, &report.witness());
    let v = check_maximal_k_rep(&s, &unit, k)?;
    let recomputed = witness_valid && (report.maximal.is_none() || (v.is_valid && v.is_maximal));
    let out = json!({
        "schema": SCHEMA,
        "mode": "report",
        "k": k,
        "unit": unit,
        "witness_valid": witness_valid,
        "is_valid": v.is_valid,
        "is_maximal": v.is_maximal,
        "counterexample": v.counterexample,
        "matches_report": recomputed == report.verified,
    });
    say!(
        "{}",
        serde_json::to_string_pretty(&out).expect("verdict serializes")
    );
    Ok(if witness_valid && verdict_code(&v) == 0 {
        0
    } else {
        1
    })
}

fn run_bench(a: BenchArgs) -> Result<u8, Failure> {
    if a.sizes.contains(&0) {
        return Err(Failure::usage("sizes must be positive"));
    }
    if !(1..=26).contains(&a.alphabet) {
        return Err(Failure::usage("alphabet must be between 1 and 26"));
    }
    if a.trials == 0 || a.ks.contains(&0) {
        return Err(Failure::usage("trials and k must be positive"));
    }
    let cfg = bench::BenchConfig {
        sizes: a.sizes,
        alphabet: a.alphabet,
        trials: a.trials,
        seed: a.seed,
        ks: a.ks,
    };
    let rows = bench::run(&cfg);
    bench::write_csv(&a.csv, &rows)?;
    let failed = rows.iter().filter(|r| !r.verified).count();
    eprintln!(
        "{} rows written to {}, {failed} unverified",
        rows.len(),
        a.csv.display()
    );
    Ok(if failed == 0 { 0 } else { 1 })
}
