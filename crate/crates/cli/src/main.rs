mod args;
mod commands;
mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let output = match commands::run(&cli.command, &cli.global) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut report = output.report;
    if cli.global.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    let rendered = match cli.global.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match (&cli.global.out, output.artifact) {
        (Some(path), Some(artifact)) => {
            if let Err(e) = std::fs::write(path, artifact + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
            print!("{rendered}");
        }
        (Some(path), None) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        (None, _) => print!("{rendered}"),
    }
    ExitCode::from(report.exit_code())
}
