use clap::Subcommand;
use dce_core::consts::{C, N_A};
use dce_core::eos::{air, divergence_exponent, hard_core_radius, EosModel};

use super::Outcome;
use crate::error::{CliError, CliResult};
use crate::output::{Report, Table};
use crate::units;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ModelKind {
    Vdw,
    Dieterici,
    Berthelot,
    ModifiedAdiabatic,
    Moss,
}

/// Model selection. Defaults describe air; the modified-adiabatic and Moss
/// defaults are placeholders, not fitted values.
#[derive(Debug, clap::Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::Vdw)]
    model: ModelKind,
    /// Attraction, Pa·m⁶/mol².
    #[arg(long, default_value_t = air::A_MOLAR, value_parser = units::plain)]
    a: f64,
    /// Berthelot attraction, Pa·m⁶·K/mol²; defaults to a·300 K.
    #[arg(long, value_parser = units::plain)]
    a_prime: Option<f64>,
    /// Excluded volume; bare numbers are l/mol.
    #[arg(long, default_value = "0.036", value_parser = units::positive_molar_volume)]
    b: f64,
    /// Molar mass; bare numbers are g/mol.
    #[arg(long, default_value = "28.96", value_parser = units::positive_molar_mass)]
    m: f64,
    /// Reference pressure, Pa (modified adiabatic).
    #[arg(long, default_value_t = 1e5, value_parser = units::positive)]
    p0: f64,
    /// Reference number density, 1/m³ (modified adiabatic).
    #[arg(long, default_value_t = 2.5e25, value_parser = units::positive)]
    n0: f64,
    #[arg(long, default_value_t = 1.4, value_parser = units::positive)]
    gamma: f64,
    #[arg(long, default_value_t = 0.5, value_parser = units::positive)]
    kappa: f64,
    /// J/kg (Moss).
    #[arg(long, default_value_t = 1e4, value_parser = units::positive)]
    e_c: f64,
    /// Moss reference density; bare numbers are g/cm³.
    #[arg(long, default_value = "0.1", value_parser = units::positive_density)]
    rho0: f64,
}

impl ModelArgs {
    fn build(&self) -> CliResult<EosModel> {
        let model = match self.model {
            ModelKind::Vdw => EosModel::van_der_waals_molar(self.a, self.b, self.m)?,
            ModelKind::Dieterici => EosModel::dieterici_molar(self.a, self.b, self.m)?,
            ModelKind::Berthelot => {
                EosModel::berthelot_molar(self.a_prime.unwrap_or(self.a * 300.0), self.b, self.m)?
            }
            ModelKind::ModifiedAdiabatic => EosModel::ModifiedAdiabatic {
                p0: self.p0,
                n0: self.n0,
                b: self.b / N_A,
                gamma: self.gamma,
                m: self.m / N_A,
            }
            .validated()?,
            ModelKind::Moss => EosModel::Moss {
                kappa: self.kappa,
                gamma: self.gamma,
                e_c: self.e_c,
                rho0: self.rho0,
                m: self.m / N_A,
            }
            .validated()?,
        };
        Ok(model)
    }
}

#[derive(Debug, clap::Args)]
#[command(group(clap::ArgGroup::new("density").required(true).args(["rho", "rho_frac"])))]
pub struct StateArgs {
    /// Density; bare numbers are g/cm³.
    #[arg(long, value_parser = units::positive_density)]
    rho: Option<f64>,
    /// Density as a fraction of the hard-core maximum.
    #[arg(long, value_parser = units::positive)]
    rho_frac: Option<f64>,
    /// Temperature, K.
    #[arg(long = "T", alias = "temperature", default_value_t = 300.0, value_parser = units::positive)]
    t: f64,
}

#[derive(Debug, clap::Args)]
pub struct PressureArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    state: StateArgs,
}

#[derive(Debug, clap::Args)]
pub struct SoundArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Density; bare numbers are g/cm³.
    #[arg(long, value_parser = units::positive_density, conflicts_with_all = ["rho_frac", "rho_frac_min"])]
    rho: Option<f64>,
    /// Single density as a fraction of the hard-core maximum.
    #[arg(long, value_parser = units::positive, conflicts_with = "rho_frac_min")]
    rho_frac: Option<f64>,
    /// Sweep start (fraction of the maximum); emits a table.
    #[arg(long, value_parser = units::positive, requires = "rho_frac_max")]
    rho_frac_min: Option<f64>,
    #[arg(long, value_parser = units::positive, requires = "rho_frac_min")]
    rho_frac_max: Option<f64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(2..=1_000_000))]
    points: u32,
    /// Temperature, K.
    #[arg(long = "T", alias = "temperature", default_value_t = 300.0, value_parser = units::positive)]
    t: f64,
    /// dT/dρ along the process, K·m³/kg; 0 is isothermal.
    #[arg(long, default_value_t = 0.0, value_parser = units::plain)]
    dt_drho: f64,
    /// v/c above which the result is flagged as relativistic.
    #[arg(long, default_value_t = 1e-4, value_parser = units::positive)]
    relativistic_threshold: f64,
}

#[derive(Debug, clap::Args)]
pub struct HardcoreArgs {
    /// Ambient bubble radius.
    #[arg(long, default_value = "4.5um", value_parser = units::positive_length)]
    r_ambient: f64,
    /// Excluded volume; bare numbers are l/mol.
    #[arg(long, default_value = "0.036", value_parser = units::positive_molar_volume)]
    b: f64,
    /// Gas density; bare numbers are g/cm³.
    #[arg(long, default_value = "1e-3", value_parser = units::positive_density)]
    rho: f64,
    /// Molar mass; bare numbers are g/mol.
    #[arg(long, default_value = "28.96", value_parser = units::positive_molar_mass)]
    m: f64,
}

#[derive(Debug, clap::Args)]
pub struct DivergenceArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Temperature, K.
    #[arg(long = "T", alias = "temperature", default_value_t = 300.0, value_parser = units::positive)]
    t: f64,
}

#[derive(Debug, Subcommand)]
pub enum EosCommand {
    /// Pressure at one state.
    Pressure(PressureArgs),
    /// Sound speed at one density or over a sweep of densities.
    SoundSpeed(SoundArgs),
    /// Radius of a bubble compressed to its hard core.
    Hardcore(HardcoreArgs),
    /// Fitted exponent of the sound-speed divergence at the hard core.
    Divergence(DivergenceArgs),
}

pub fn run(cmd: &EosCommand) -> CliResult<Outcome> {
    match cmd {
        EosCommand::Pressure(a) => pressure(a),
        EosCommand::SoundSpeed(a) => sound_speed(a),
        EosCommand::Hardcore(a) => hardcore(a),
        EosCommand::Divergence(a) => divergence(a),
    }
}

fn rho_max(model: &EosModel) -> CliResult<f64> {
    model
        .rho_max()
        .ok_or(CliError::Domain(dce_core::Error::NoHardCore {
            model: model.name(),
        }))
}

fn resolve_rho(model: &EosModel, rho: Option<f64>, frac: Option<f64>) -> CliResult<f64> {
    match (rho, frac) {
        (Some(r), _) => Ok(r),
        (None, Some(f)) => Ok(f * rho_max(model)?),
        (None, None) => Err(CliError::usage("one of --rho or --rho-frac is required")),
    }
}

fn pressure(a: &PressureArgs) -> CliResult<Outcome> {
    let model = a.model.build()?;
    let rho = resolve_rho(&model, a.state.rho, a.state.rho_frac)?;
    let p = model.pressure(rho, a.state.t)?;
    let mut r = Report::new("eos pressure");
    r.field("model", model.name(), None)
        .field("rho", rho, Some("kg/m^3"))
        .field("rho_over_rhomax", model.rho_max().map(|m| rho / m), None)
        .field("temperature", a.state.t, Some("K"))
        .field("pressure", p, Some("Pa"));
    Ok(Outcome::json(r))
}

fn sound_speed(a: &SoundArgs) -> CliResult<Outcome> {
    let model = a.model.build()?;
    if let (Some(lo), Some(hi)) = (a.rho_frac_min, a.rho_frac_max) {
        if !(hi > lo) {
            return Err(CliError::usage("--rho-frac-max must exceed --rho-frac-min"));
        }
        let rmax = rho_max(&model)?;
        let n = a.points as usize;
        let mut t = Table::new(&[
            ("rho_over_rhomax", None),
            ("v_m_per_s", Some("m/s")),
            ("v_over_c", None),
        ]);
        for i in 0..n {
            let f = if i == n - 1 {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            };
            let v = model.sound_speed(f * rmax, a.t, a.dt_drho)?;
            t.rows.push(vec![f.into(), v.into(), (v / C).into()]);
        }
        let mut r = Report::new("eos sound-speed");
        r.field("model", model.name(), None)
            .field("temperature", a.t, Some("K"))
            .field("dt_drho", a.dt_drho, Some("K m^3/kg"))
            .field("rho_max", rmax, Some("kg/m^3"));
        r.table = Some(t);
        return Ok(Outcome::csv(r));
    }
    let rho = resolve_rho(&model, a.rho, a.rho_frac)?;
    let v = model.sound_speed(rho, a.t, a.dt_drho)?;
    let mut r = Report::new("eos sound-speed");
    r.field("model", model.name(), None)
        .field("rho", rho, Some("kg/m^3"))
        .field("rho_over_rhomax", model.rho_max().map(|m| rho / m), None)
        .field("temperature", a.t, Some("K"))
        .field("dt_drho", a.dt_drho, Some("K m^3/kg"))
        .field("v_m_per_s", v, Some("m/s"))
        .field("v_over_c", v / C, None)
        .field(
            "relativistic_regime",
            v / C > a.relativistic_threshold,
            None,
        );
    Ok(Outcome::json(r))
}

fn hardcore(a: &HardcoreArgs) -> CliResult<Outcome> {
    let r_hc = hard_core_radius(a.r_ambient, a.b, a.rho, a.m)?;
    let mut r = Report::new("eos hardcore");
    r.field("r_ambient", a.r_ambient, Some("m"))
        .field("b_molar", a.b, Some("m^3/mol"))
        .field("rho", a.rho, Some("kg/m^3"))
        .field("molar_mass", a.m, Some("kg/mol"))
        .field("r_hc", r_hc, Some("m"))
        .field("r_hc_um", r_hc * 1e6, Some("um"))
        .field("compression_ratio", a.r_ambient / r_hc, None);
    Ok(Outcome::json(r))
}

fn divergence(a: &DivergenceArgs) -> CliResult<Outcome> {
    let model = a.model.build()?;
    let q = divergence_exponent(&model, a.t)?;
    let mut r = Report::new("eos divergence");
    r.field("model", model.name(), None)
        .field("temperature", a.t, Some("K"))
        .field("exponent", q, None);
    Ok(Outcome::json(r))
}
