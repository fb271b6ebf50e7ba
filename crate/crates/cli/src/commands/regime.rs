use std::f64::consts::PI;

use dce_core::bogolubov::regime_thresholds;

use super::{profile, Outcome};
use crate::error::CliResult;
use crate::output::Report;
use crate::units;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_parser = units::positive)]
    n_in: f64,
    #[arg(long, value_parser = units::positive)]
    n_out: f64,
    /// Transition time scale, e.g. `1fs`.
    #[arg(long, value_parser = units::positive_time)]
    t0: f64,
    /// Frequency to classify, e.g. `0.1PHz` or bare rad/s.
    #[arg(long, value_parser = units::positive_angular_frequency)]
    probe: Option<f64>,
}

pub fn run(a: &Args) -> CliResult<Outcome> {
    let p = profile(a.n_in, a.n_out, a.t0)?;
    let th = regime_thresholds(&p)?;
    let mut r = Report::new("regime");
    r.field("n_in", a.n_in, None)
        .field("n_out", a.n_out, None)
        .field("t0", a.t0, Some("s"))
        .field("omega_sudden", th.omega_sudden, Some("rad/s"))
        .field("omega_sudden_hz", th.omega_sudden / (2.0 * PI), Some("Hz"))
        .field("omega_adiabatic", th.omega_adiabatic, Some("rad/s"))
        .field(
            "omega_adiabatic_hz",
            th.omega_adiabatic / (2.0 * PI),
            Some("Hz"),
        )
        .field(
            "transition_band_empty",
            th.omega_sudden > th.omega_adiabatic,
            None,
        );
    if let Some(w) = a.probe {
        r.field("probe_omega", w, Some("rad/s")).field(
            "probe_regime",
            th.classify(w).as_str(),
            None,
        );
    }
    Ok(Outcome::json(r))
}
