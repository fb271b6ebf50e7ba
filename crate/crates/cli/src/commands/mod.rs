mod budget;
mod eos;
mod invert;
mod power;
mod regime;
mod spectrum;

use clap::Subcommand;
use dce_core::{MediumPair, TanhProfile};

use crate::error::CliResult;
use crate::output::{Format, Report};

pub struct Outcome {
    pub report: Report,
    pub default_format: Format,
}

impl Outcome {
    fn json(report: Report) -> Self {
        Self {
            report,
            default_format: Format::Json,
        }
    }

    fn csv(report: Report) -> Self {
        Self {
            report,
            default_format: Format::Csv,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the emitted number spectrum dN/dω.
    Spectrum(spectrum::Args),
    /// Photon number and energy for a sudden change with a sharp cutoff.
    Budget(budget::Args),
    /// Solve the photon-count relation for the unknown refractive index.
    Invert(invert::Args),
    /// Equations of state: pressure, sound speed, hard core.
    #[command(subcommand)]
    Eos(eos::EosCommand),
    /// Energy radiated per acoustic cycle by a slowly moving bubble wall.
    Power(power::Args),
    /// Sudden and adiabatic threshold frequencies.
    Regime(regime::Args),
}

pub fn run(cmd: &Command) -> CliResult<Outcome> {
    match cmd {
        Command::Spectrum(a) => spectrum::run(a),
        Command::Budget(a) => budget::run(a),
        Command::Invert(a) => invert::run(a),
        Command::Eos(c) => eos::run(c),
        Command::Power(a) => power::run(a),
        Command::Regime(a) => regime::run(a),
    }
}

fn profile(n_in: f64, n_out: f64, t0: f64) -> CliResult<TanhProfile> {
    Ok(TanhProfile::from_t0(MediumPair::new(n_in, n_out)?, t0)?)
}
