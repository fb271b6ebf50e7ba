//! `dce`: photon production by a changing refractive index, from the shell.

mod commands;
mod config;
mod error;
mod output;
mod units;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use crate::commands::Command;
use crate::error::{CliError, CliResult};
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "dce",
    version,
    about = "Dynamical Casimir photon budgets for sonoluminescence estimates"
)]
struct Cli {
    /// Output format; tables default to csv, scalar results to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write to a file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    /// File of `key = value` lines using flag names; flags on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Print errors to stderr as a JSON object.
    #[arg(long, global = true)]
    error_json: bool,

    #[command(subcommand)]
    command: Command,
}

fn run(args: Vec<String>) -> CliResult<()> {
    let args = config::apply(args)?;
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return Ok(());
        }
        Err(e) => return Err(CliError::usage(e.to_string().trim_end().to_owned())),
    };
    let out = commands::run(&cli.command)?;
    let format = cli.format.unwrap_or(out.default_format);
    let text = out.report.render(format);
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let json_errors = args.iter().any(|a| a == "--error-json");
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => e.report(json_errors),
    }
}
