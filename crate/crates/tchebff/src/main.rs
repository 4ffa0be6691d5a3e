use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use tchebff::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => match emit(&cli, &outcome.output) {
            Ok(()) => ExitCode::from(outcome.exit as u8),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(tchebff::cli::EXIT_USAGE as u8)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(cli: &Cli, output: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, output).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}
