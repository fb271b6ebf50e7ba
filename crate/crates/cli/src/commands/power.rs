use std::fs::File;
use std::path::PathBuf;

use dce_core::adiabatic_emitters::{
    eberlein_energy_by_parts_form, eberlein_energy_fifth_derivative_form, schutzhold_energy,
    RadiusTrajectory,
};

use super::Outcome;
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Report};
use crate::units;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Form {
    Eberlein5,
    EberleinByparts,
    Schutzhold,
}

impl Form {
    fn as_str(self) -> &'static str {
        match self {
            Form::Eberlein5 => "eberlein5",
            Form::EberleinByparts => "eberlein-byparts",
            Form::Schutzhold => "schutzhold",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Waveform {
    Sinusoid,
    Constant,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum, default_value_t = Form::EberleinByparts)]
    model: Form,
    /// Refractive index of the liquid.
    #[arg(long, value_parser = units::positive)]
    n: f64,
    /// Named waveform R(t) = R₀(1 + A sin(Ωt + φ)), or a constant R₀.
    #[arg(long, value_enum, default_value_t = Waveform::Sinusoid, conflicts_with = "trajectory")]
    waveform: Waveform,
    #[arg(long, default_value = "4.5um", value_parser = units::positive_length)]
    r0: f64,
    /// Relative amplitude A.
    #[arg(long, default_value_t = 0.1, value_parser = units::plain)]
    amplitude: f64,
    /// Drive frequency, e.g. `30kHz`; bare numbers are rad/s.
    #[arg(long, default_value = "30kHz", value_parser = units::positive_angular_frequency)]
    drive: f64,
    /// Phase φ, rad.
    #[arg(long, default_value_t = 0.0, value_parser = units::plain)]
    phase: f64,
    /// CSV file with header `t_seconds,R_meters`.
    #[arg(long)]
    trajectory: Option<PathBuf>,
    /// Period of the sampled trajectory.
    #[arg(long, value_parser = units::positive_time, requires = "trajectory")]
    period: Option<f64>,
    /// Evaluate the named waveform from this many samples per period instead of exactly.
    #[arg(long, conflicts_with = "trajectory", value_parser = clap::value_parser!(u32).range(2..))]
    samples_per_period: Option<u32>,
}

fn trajectory(a: &Args) -> CliResult<RadiusTrajectory> {
    if let Some(path) = &a.trajectory {
        let file = File::open(path).map_err(|e| {
            CliError::usage(format!("cannot open trajectory `{}`: {e}", path.display()))
        })?;
        return Ok(RadiusTrajectory::from_csv(file, a.period)?);
    }
    let period = 2.0 * std::f64::consts::PI / a.drive;
    let tr = match a.waveform {
        Waveform::Sinusoid => RadiusTrajectory::sinusoid(a.r0, a.amplitude, a.drive, a.phase)?,
        Waveform::Constant => RadiusTrajectory::constant(a.r0, Some(period))?,
    };
    match a.samples_per_period {
        Some(n) => Ok(tr.sample(n as usize)?),
        None => Ok(tr),
    }
}

fn relative_diff(x: f64, y: f64) -> f64 {
    let scale = x.abs().max(y.abs());
    if scale == 0.0 {
        0.0
    } else {
        (x - y).abs() / scale
    }
}

pub fn run(a: &Args) -> CliResult<Outcome> {
    let tr = trajectory(a)?;
    let mut r = Report::new("power");
    r.field("form", a.model.as_str(), None)
        .field("n", a.n, None)
        .field(
            "trajectory",
            if tr.is_analytic() {
                "analytic"
            } else {
                "sampled"
            },
            None,
        )
        .field("period", tr.period(), Some("s"));
    match a.model {
        Form::Schutzhold => {
            let w = schutzhold_energy(&tr, a.n)?;
            r.field("w_joules", w, Some("J")).field(
                "cross_check_relative_diff",
                Cell::Missing,
                None,
            );
        }
        Form::Eberlein5 | Form::EberleinByparts => {
            let w5 = eberlein_energy_fifth_derivative_form(&tr, a.n)?;
            let wp = eberlein_energy_by_parts_form(&tr, a.n)?;
            let w = if a.model == Form::Eberlein5 { w5 } else { wp };
            r.field("w_joules", w, Some("J"))
                .field("w_eberlein5_joules", w5, Some("J"))
                .field("w_eberlein_byparts_joules", wp, Some("J"))
                .field("cross_check_relative_diff", relative_diff(w5, wp), None);
        }
    }
    Ok(Outcome::json(r))
}
