use std::process::ExitCode;

use clap::Parser;

mod commands;

use commands::{Cli, Failure};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            if let Err(e) = out.emit(cli.out.as_deref()) {
                eprintln!("monogen: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.verdict.is_ok() { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("monogen: {msg}");
            ExitCode::from(2)
        }
    }
}
