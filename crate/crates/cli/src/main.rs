use std::process::ExitCode;

use clap::Parser;
use maxrep_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("maxrep: {e}");
            ExitCode::from(e.code)
        }
    }
}
