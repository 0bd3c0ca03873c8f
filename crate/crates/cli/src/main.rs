//! `rwdist`: hitting, commute and cover time distributions from the command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 refused computation (exact-method
//! cap), 4 I/O error.

mod args;
mod commands;
mod output;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// A diagnostic for standard error together with its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn refusal(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let text = match &cli.command {
        Command::Hitting(a) => commands::hitting(a)?,
        Command::Commute(a) => commands::commute(a)?,
        Command::Cover(a) => commands::cover(a)?,
        Command::Compare(a) => commands::compare(a)?,
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
        .map_err(|e| Failure::io(format!("cannot write output: {e}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
