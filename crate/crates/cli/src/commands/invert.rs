use dce_core::inverse_solver::{
    branch_approximations, solve_n_in, solve_n_out, InversionProblem, KnownIndex,
};

use super::Outcome;
use crate::error::CliResult;
use crate::output::{Report, Table};
use crate::units;

#[derive(Debug, clap::Args)]
#[command(group(clap::ArgGroup::new("known").required(true).args(["n_in", "n_out"])))]
pub struct Args {
    /// Target photon count.
    #[arg(long, value_parser = units::positive)]
    photons: f64,
    #[arg(long, value_parser = units::positive)]
    n_in: Option<f64>,
    #[arg(long, value_parser = units::positive)]
    n_out: Option<f64>,
    #[arg(long, value_parser = units::positive)]
    n_liquid: f64,
    /// Observed cutoff wavenumber times bubble radius.
    #[arg(long, value_parser = units::positive)]
    kr: f64,
}

pub fn run(a: &Args) -> CliResult<Outcome> {
    let known = match (a.n_in, a.n_out) {
        (Some(v), _) => KnownIndex::NIn(v),
        (None, Some(v)) => KnownIndex::NOut(v),
        (None, None) => unreachable!("clap enforces the group"),
    };
    let problem = InversionProblem::new(a.photons, known, a.n_liquid, a.kr)?;
    let pairs: Vec<(f64, f64)> = match known {
        KnownIndex::NOut(n_out) => solve_n_in(&problem)?.iter().map(|&x| (x, n_out)).collect(),
        KnownIndex::NIn(n_in) => solve_n_out(&problem)?.iter().map(|&y| (n_in, y)).collect(),
    };

    let mut t = Table::new(&[
        ("n_in", None),
        ("n_out", None),
        ("forward_n", Some("photons")),
        ("relative_residual", None),
        ("near_origin", None),
        ("near_axis", None),
        ("near_diagonal_plus", None),
        ("near_diagonal_minus", None),
    ]);
    for &(n_in, n_out) in &pairs {
        let forward = problem.forward_count(n_in, n_out);
        let b = branch_approximations(&problem, n_out)?;
        t.rows.push(vec![
            n_in.into(),
            n_out.into(),
            forward.into(),
            (forward / a.photons - 1.0).into(),
            b.near_origin.into(),
            b.near_axis.into(),
            b.near_diagonal_plus.into(),
            b.near_diagonal_minus.into(),
        ]);
    }

    let (side, value) = match known {
        KnownIndex::NIn(v) => ("n_in", v),
        KnownIndex::NOut(v) => ("n_out", v),
    };
    let mut r = Report::new("invert");
    r.field("photons", a.photons, Some("photons"))
        .field("known_side", side, None)
        .field("known_index", value, None)
        .field("n_liquid", a.n_liquid, None)
        .field("kr_observed", a.kr, None)
        .field("prefactor", problem.prefactor(), None)
        .field("root_count", pairs.len() as f64, None);
    r.table = Some(t);
    Ok(Outcome::json(r))
}
