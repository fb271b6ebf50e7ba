use std::f64::consts::PI;

use dce_core::spectrum::{linear_grid, log_grid, planck_comparison_spectrum, planck_temperature};
use dce_core::{SharpCutoff, SpectrumTable};

use super::{profile, Outcome};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Report, Table};
use crate::units;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Grid {
    Linear,
    Log,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_parser = units::positive)]
    n_in: f64,
    #[arg(long, value_parser = units::positive)]
    n_out: f64,
    /// Transition time scale, e.g. `1fs`.
    #[arg(long, value_parser = units::positive_time)]
    t0: f64,
    /// Upper end of the grid, e.g. `30PHz` (cycles) or bare rad/s.
    #[arg(long, value_parser = units::positive_angular_frequency)]
    omega_max: f64,
    /// Lower end; defaults to omega-max/points (linear) or omega-max/1e4 (log).
    #[arg(long, value_parser = units::positive_angular_frequency)]
    omega_min: Option<f64>,
    #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u32).range(1..=1_000_000))]
    points: u32,
    #[arg(long, value_enum, default_value_t = Grid::Linear)]
    grid: Grid,
    /// Emission volume, m³ (or `um3`). The default gives photons per unit volume.
    #[arg(long, default_value = "1", value_parser = units::positive_volume)]
    volume: f64,
    /// Observed cutoff wavelength; rows above ω_max are zeroed.
    #[arg(long, value_parser = units::positive_length)]
    cutoff_wavelength: Option<f64>,
    /// Index of the liquid the cutoff is observed in.
    #[arg(long, default_value_t = 1.0, value_parser = units::positive)]
    n_liquid: f64,
    /// Add a blackbody column scaled to the same maximum as the spectrum.
    #[arg(long)]
    planck_overlay: bool,
}

pub fn run(a: &Args) -> CliResult<Outcome> {
    let p = profile(a.n_in, a.n_out, a.t0)?;
    let n = a.points as usize;
    let grid = match a.grid {
        Grid::Linear => linear_grid(
            a.omega_min.unwrap_or(a.omega_max / n as f64),
            a.omega_max,
            n,
        )?,
        Grid::Log => log_grid(a.omega_min.unwrap_or(a.omega_max * 1e-4), a.omega_max, n)?,
    };
    if grid[0] > a.omega_max {
        return Err(CliError::usage("--omega-min must not exceed --omega-max"));
    }
    let cutoff = a
        .cutoff_wavelength
        .map(|l| SharpCutoff::from_observed_wavelength(l, a.n_liquid, a.n_out))
        .transpose()?;
    let table = SpectrumTable::sample(p, a.volume, cutoff, &grid)?;

    let mut columns = vec![
        ("omega_rad_per_s", Some("rad/s")),
        ("omega_PHz", Some("PHz")),
        ("dN_domega", Some("s/rad")),
        ("regime", None),
    ];
    let planck = if a.planck_overlay {
        columns.push(("planck_dN_domega", Some("s/rad")));
        let shape: Vec<f64> = grid
            .iter()
            .map(|&w| planck_comparison_spectrum(&p, w, 1.0))
            .collect::<Result<_, _>>()?;
        let top = shape.iter().cloned().fold(0.0, f64::max);
        let peak = table.peak().map_or(0.0, |r| r.dn_domega);
        let scale = if top > 0.0 { peak / top } else { 0.0 };
        Some(shape.into_iter().map(|v| v * scale).collect::<Vec<_>>())
    } else {
        None
    };

    let mut t = Table::new(&columns);
    for (i, row) in table.rows.iter().enumerate() {
        let mut cells: Vec<Cell> = vec![
            row.omega_out.into(),
            (row.omega_out / (2.0 * PI * 1e15)).into(),
            row.dn_domega.into(),
            row.regime.as_str().into(),
        ];
        if let Some(pl) = &planck {
            cells.push(pl[i].into());
        }
        t.rows.push(cells);
    }

    let mut r = Report::new("spectrum");
    r.field("n_in", a.n_in, None)
        .field("n_out", a.n_out, None)
        .field("t0", a.t0, Some("s"))
        .field("tau0", p.tau0(), Some("s"))
        .field("volume", a.volume, Some("m^3"))
        .field("omega_sudden", table.thresholds.omega_sudden, Some("rad/s"))
        .field(
            "omega_adiabatic",
            table.thresholds.omega_adiabatic,
            Some("rad/s"),
        );
    if let Some(pk) = table.peak() {
        r.field("peak_omega", pk.omega_out, Some("rad/s"));
    }
    if a.planck_overlay {
        r.field("planck_kt", planck_temperature(&p)?, Some("J"));
    }
    r.table = Some(t);
    Ok(Outcome::csv(r))
}
