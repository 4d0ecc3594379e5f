use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use maxrep::{Seq, Symbol};

use crate::Failure;

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Input string, given literally. Takes precedence over --input and stdin.
    #[arg(long, allow_hyphen_values = true)]
    pub text: Option<String>,
    /// Read the input from FILE instead of standard input.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Treat the input as raw bytes (same as MAXREP_BYTE_MODE=1).
    #[arg(long)]
    pub bytes: bool,
}

impl InputArgs {
    pub fn byte_mode(&self) -> bool {
        self.bytes || std::env::var("MAXREP_BYTE_MODE").is_ok_and(|v| v == "1")
    }

    pub fn read(&self) -> Result<Seq, Failure> {
        self.read_as(self.byte_mode())
    }

    pub fn read_as(&self, byte_mode: bool) -> Result<Seq, Failure> {
        let raw = if let Some(text) = &self.text {
            text.as_bytes().to_vec()
        } else if let Some(path) = &self.input {
            fs::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        } else {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
            buf
        };
        if byte_mode {
            return Ok(Seq::from_bytes(&raw));
        }
        let text = String::from_utf8(raw)
            .map_err(|_| Failure::usage("input is not valid UTF-8 (try --bytes)"))?;
        let text = text
            .strip_suffix('\n')
            .map_or(text.as_str(), |t| t.strip_suffix('\r').unwrap_or(t));
        Ok(Seq::from_text(text))
    }
}

/// Decodes a sequence given on the command line or in a report. In byte
/// mode every char must be below U+0100.
pub fn parse_seq(text: &str, byte_mode: bool) -> Result<Seq, Failure> {
    if byte_mode {
        Seq::from_latin1(text)
            .ok_or_else(|| Failure::usage(format!("{text:?} is not a byte string")))
    } else {
        Ok(Seq::from_text(text))
    }
}

pub fn parse_symbol(text: &str, byte_mode: bool) -> Result<Symbol, Failure> {
    match parse_seq(text, byte_mode)?.symbols() {
        [c] => Ok(*c),
        _ => Err(Failure::usage(format!("{text:?} is not a single symbol"))),
    }
}
