use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside its domain (non-positive, non-finite, ...).
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The quantity requires n_in != n_out.
    #[error("degenerate profile: n_in = n_out = {n}")]
    DegenerateProfile { n: f64 },

    #[error("adaptive quadrature did not converge: estimate {estimate:e}, error {error:e} after {intervals} intervals")]
    QuadratureFailure {
        estimate: f64,
        error: f64,
        intervals: usize,
    },

    #[error("density {rho} kg/m^3 is at or above the hard-core limit {rho_max} kg/m^3 ({model})")]
    HardCoreViolation {
        model: &'static str,
        rho: f64,
        rho_max: f64,
    },

    #[error("{model} equation of state has no maximum hard-core density")]
    NoHardCore { model: &'static str },

    #[error(
        "thermodynamically unstable state: squared sound speed {v_squared:e} m^2/s^2 is negative"
    )]
    Instability { v_squared: f64 },

    #[error("differentiation failed: {0}")]
    Differentiation(String),

    #[error("trajectory has no period; per-cycle integrals need one")]
    MissingPeriod,

    #[error("trajectory error: {0}")]
    Trajectory(String),

    /// No positive real root; `min_achievable` is the smallest photon count
    /// reachable at the known index, when meaningful.
    #[error("no solution for N = {target:e}; minimum achievable N = {min_achievable:e}")]
    NoSolution { target: f64, min_achievable: f64 },
}

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}
