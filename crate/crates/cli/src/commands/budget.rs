use std::f64::consts::PI;

use dce_core::casimir_static::StaticBudget;
use dce_core::consts::EV;
use dce_core::spectrum::photon_budget_sharp_cutoff;
use dce_core::{MediumPair, SharpCutoff};

use super::Outcome;
use crate::error::CliResult;
use crate::output::Report;
use crate::units;

#[derive(Debug, clap::Args)]
#[command(group(clap::ArgGroup::new("cutoff").required(true).args(["k_observed", "wavelength"])))]
pub struct Args {
    #[arg(long, value_parser = units::positive)]
    n_in: f64,
    #[arg(long, value_parser = units::positive)]
    n_out: f64,
    /// Bubble radius, e.g. `40um`.
    #[arg(long, value_parser = units::positive_length)]
    radius: f64,
    /// Observed cutoff wavenumber, rad/m.
    #[arg(long, value_parser = units::positive)]
    k_observed: Option<f64>,
    /// Observed cutoff wavelength, e.g. `360nm`; K = 2π/λ.
    #[arg(long, value_parser = units::positive_length)]
    wavelength: Option<f64>,
    /// Index of the liquid the photons are observed in.
    #[arg(long, value_parser = units::positive)]
    n_liquid: f64,
    /// Price the static bulk Casimir energy in photons of this energy, e.g. `4eV`.
    #[arg(long, value_parser = units::energy)]
    photon_energy: Option<f64>,
}

pub fn run(a: &Args) -> CliResult<Outcome> {
    let media = MediumPair::new(a.n_in, a.n_out)?;
    let cutoff = match (a.k_observed, a.wavelength) {
        (Some(k), _) => SharpCutoff::from_observed(k, a.n_liquid, a.n_out)?,
        (None, Some(l)) => SharpCutoff::from_observed_wavelength(l, a.n_liquid, a.n_out)?,
        (None, None) => unreachable!("clap enforces the group"),
    };
    let volume = 4.0 / 3.0 * PI * a.radius.powi(3);
    let b = photon_budget_sharp_cutoff(&media, volume, &cutoff)?;
    let mut r = Report::new("budget");
    r.field("n_in", a.n_in, None)
        .field("n_out", a.n_out, None)
        .field("n_liquid", a.n_liquid, None)
        .field("radius", a.radius, Some("m"))
        .field("k_observed", cutoff.k_observed(), Some("rad/m"))
        .field("k_medium", cutoff.k(), Some("rad/m"))
        .field("kr_observed", cutoff.k_observed() * a.radius, None)
        .field("n", b.n, Some("photons"))
        .field("e_joules", b.energy, Some("J"))
        .field("e_ev_total", b.energy / EV, Some("eV"))
        .field("mean_photon_ev", b.mean_energy / EV, Some("eV"))
        .field("omega_max", b.omega_max, Some("rad/s"));
    // static comparison: bulk term only, cut off at the observed wavenumber
    let st = StaticBudget::new(
        a.n_in * a.n_in,
        a.n_out * a.n_out,
        a.radius,
        cutoff.k_observed(),
    )?;
    r.field("static_energy_joules", st.e_cavity, Some("J"))
        .field("static_energy_ev", st.e_cavity / EV, Some("eV"));
    if let Some(e) = a.photon_energy {
        r.field(
            "static_photon_equivalent",
            st.photon_equivalent(e)?,
            Some("photons"),
        );
    }
    Ok(Outcome::json(r))
}
