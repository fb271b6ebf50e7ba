//! Radiated energy per acoustic cycle for slowly moving bubble walls.
//!
//! Trajectories are either finite Fourier series (derivatives exact) or
//! uniform samples (central stencils, no smoothing). Sampled fifth
//! derivatives amplify noise; use the analytic path when precision matters.

mod stencil;
mod trig;

use std::f64::consts::PI;
use std::io::Read;

use crate::consts::{C, HBAR};
use crate::error::{require_positive, Error, Result};

pub use trig::TrigSeries;

/// Numerically estimated constant in Eberlein's result, kept to the two
/// decimals available.
pub const EBERLEIN_FACTOR: f64 = 1.16;

/// Minimum samples per period accepted for sampled periodic trajectories.
pub const MIN_SAMPLES_PER_PERIOD: usize = 64;

const CLOSURE_TOL: f64 = 1e-9;
const SPACING_TOL: f64 = 1e-9;

/// Which power of the radius is differentiated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Power {
    R,
    R2,
    R3,
}

impl Power {
    pub fn exponent(self) -> u32 {
        match self {
            Power::R => 1,
            Power::R2 => 2,
            Power::R3 => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Analytic(TrigSeries),
    Sampled {
        t_start: f64,
        dt: f64,
        values: Vec<f64>,
    },
}

/// Bubble radius R(t) in metres.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusTrajectory {
    kind: Kind,
    period: Option<f64>,
}

impl RadiusTrajectory {
    /// Constant radius; `period` only sets the integration window.
    pub fn constant(r0: f64, period: Option<f64>) -> Result<Self> {
        require_positive("r0", r0)?;
        if let Some(p) = period {
            require_positive("period", p)?;
        }
        let omega = period.map_or(1.0, |p| 2.0 * PI / p);
        Ok(Self {
            kind: Kind::Analytic(TrigSeries::constant(omega, r0)),
            period,
        })
    }

    /// `R(t) = R₀ (1 + A sin(Ωt + φ))`, `|A| < 1`.
    pub fn sinusoid(r0: f64, amplitude: f64, omega: f64, phase: f64) -> Result<Self> {
        require_positive("r0", r0)?;
        require_positive("omega", omega)?;
        if !(amplitude.abs() < 1.0) {
            return Err(Error::InvalidParameter {
                name: "amplitude",
                value: amplitude,
                reason: "relative amplitude must satisfy |A| < 1 so that R > 0",
            });
        }
        let (s, c) = phase.sin_cos();
        let series = TrigSeries::new(
            omega,
            vec![r0, r0 * amplitude * s],
            vec![0.0, r0 * amplitude * c],
        );
        Ok(Self {
            kind: Kind::Analytic(series),
            period: Some(2.0 * PI / omega),
        })
    }

    /// General periodic series with fundamental `omega`.
    pub fn fourier(series: TrigSeries) -> Result<Self> {
        require_positive("omega", series.omega())?;
        let period = 2.0 * PI / series.omega();
        // positivity on a grid fine enough for the highest harmonic
        let n = 64 * (series.degree() + 1);
        for i in 0..n {
            let r = series.eval(period * i as f64 / n as f64);
            if !(r > 0.0) {
                return Err(Error::Trajectory(format!("radius {r:e} m is not positive")));
            }
        }
        Ok(Self {
            kind: Kind::Analytic(series),
            period: Some(period),
        })
    }

    /// Uniform samples starting at `t_start` with spacing `dt`.
    ///
    /// With a period, the samples must cover exactly one period, optionally
    /// including the closing sample at `t_start + period` (which must match
    /// the first within 1e-9 relative and is then dropped).
    pub fn sampled(
        t_start: f64,
        dt: f64,
        mut values: Vec<f64>,
        period: Option<f64>,
    ) -> Result<Self> {
        require_positive("dt", dt)?;
        if !t_start.is_finite() {
            return Err(Error::InvalidParameter {
                name: "t_start",
                value: t_start,
                reason: "must be finite",
            });
        }
        if let Some(bad) = values.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
            return Err(Error::Trajectory(format!(
                "radius {bad:e} m is not positive"
            )));
        }
        if let Some(p) = period {
            require_positive("period", p)?;
            let steps = p / dt;
            let n = steps.round() as usize;
            if (steps - n as f64).abs() > 1e-6 * steps {
                return Err(Error::Trajectory(format!(
                    "period {p:e} s is not a whole number of sample steps ({steps})"
                )));
            }
            if n < MIN_SAMPLES_PER_PERIOD {
                return Err(Error::Trajectory(format!(
                    "{n} samples per period; at least {MIN_SAMPLES_PER_PERIOD} required"
                )));
            }
            if values.len() == n + 1 {
                let (first, last) = (values[0], values[n]);
                if (last - first).abs() > CLOSURE_TOL * first.abs().max(last.abs()) {
                    return Err(Error::Trajectory(format!(
                        "trajectory does not close: R(start) = {first:e}, R(start + period) = {last:e}"
                    )));
                }
                values.pop();
            } else if values.len() != n {
                return Err(Error::Trajectory(format!(
                    "{} samples given but one period spans {n} steps",
                    values.len()
                )));
            }
        } else if values.is_empty() {
            return Err(Error::Trajectory("no samples".into()));
        }
        Ok(Self {
            kind: Kind::Sampled {
                t_start,
                dt,
                values,
            },
            period,
        })
    }

    /// Reads `t_seconds,R_meters` rows.
    pub fn from_csv<R: Read>(reader: R, period: Option<f64>) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr
            .headers()
            .map_err(|e| Error::Trajectory(e.to_string()))?
            .clone();
        if headers.len() != 2 || &headers[0] != "t_seconds" || &headers[1] != "R_meters" {
            return Err(Error::Trajectory(format!(
                "expected header `t_seconds,R_meters`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut ts = Vec::new();
        let mut rs = Vec::new();
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::Trajectory(e.to_string()))?;
            let parse = |i: usize| -> Result<f64> {
                rec[i]
                    .parse::<f64>()
                    .map_err(|e| Error::Trajectory(format!("row {}: {e}", line + 1)))
            };
            ts.push(parse(0)?);
            rs.push(parse(1)?);
        }
        if ts.len() < 2 {
            return Err(Error::Trajectory("need at least two samples".into()));
        }
        let dt = (ts[ts.len() - 1] - ts[0]) / (ts.len() - 1) as f64;
        if !(dt > 0.0) {
            return Err(Error::Trajectory("time column must increase".into()));
        }
        for (i, w) in ts.windows(2).enumerate() {
            let step = w[1] - w[0];
            // allow for the decimal rounding of large absolute times
            let tol = SPACING_TOL * dt + 4.0 * f64::EPSILON * w[1].abs();
            if (step - dt).abs() > tol {
                return Err(Error::Trajectory(format!(
                    "non-uniform spacing at row {}: step {step:e} s vs mean {dt:e} s",
                    i + 2
                )));
            }
        }
        Self::sampled(ts[0], dt, rs, period)
    }

    pub fn period(&self) -> Option<f64> {
        self.period
    }

    pub fn is_analytic(&self) -> bool {
        matches!(self.kind, Kind::Analytic(_))
    }

    /// Radius at `t` (periodic extension when a period is set).
    pub fn radius(&self, t: f64) -> Result<f64> {
        match &self.kind {
            Kind::Analytic(s) => Ok(s.eval(t)),
            Kind::Sampled { .. } => self.sampled_derivative(Power::R, 0, t),
        }
    }

    /// Samples an analytic trajectory over one period.
    pub fn sample(&self, samples_per_period: usize) -> Result<Self> {
        let period = self.period.ok_or(Error::MissingPeriod)?;
        match &self.kind {
            Kind::Analytic(s) => {
                let dt = period / samples_per_period as f64;
                let values = (0..samples_per_period)
                    .map(|i| s.eval(i as f64 * dt))
                    .collect();
                Self::sampled(0.0, dt, values, Some(period))
            }
            Kind::Sampled { .. } => Ok(self.clone()),
        }
    }

    fn sampled_derivative(&self, power: Power, order: usize, t: f64) -> Result<f64> {
        let Kind::Sampled {
            t_start,
            dt,
            values,
        } = &self.kind
        else {
            unreachable!()
        };
        let n = values.len() as i64;
        let p = power.exponent() as i32;
        let x = (t - t_start) / dt;
        let node_at = |i: i64| -> Result<f64> {
            let idx = match self.period {
                Some(_) => i.rem_euclid(n),
                None if (0..n).contains(&i) => i,
                None => {
                    return Err(Error::Differentiation(format!(
                        "stencil node {i} outside the {n} available samples"
                    )))
                }
            };
            Ok(values[idx as usize].powi(p))
        };
        let deriv_at = |i: i64| -> Result<f64> {
            let centre = node_at(i)?;
            if order == 0 {
                return Ok(centre);
            }
            let w = stencil::central_weights(order, stencil::ACCURACY);
            let h = stencil::half_width(order, stencil::ACCURACY) as i64;
            // the weights sum to zero, so differencing against the centre
            // drops the constant part before it can leave rounding residue
            let mut acc = 0.0;
            for (k, wk) in (-h..=h).zip(&w) {
                acc += wk * (node_at(i + k)? - centre);
            }
            Ok(acc / dt.powi(order as i32))
        };
        let nearest = x.round();
        if (x - nearest).abs() <= 1e-9 {
            return deriv_at(nearest as i64);
        }
        // off-grid: degree-5 Lagrange interpolation of nodal derivatives
        let base = x.floor() as i64 - 2;
        let nodes: Vec<i64> = (base..base + 6).collect();
        let mut acc = 0.0;
        for &j in &nodes {
            let mut l = 1.0;
            for &m in &nodes {
                if m != j {
                    l *= (x - m as f64) / (j - m) as f64;
                }
            }
            acc += l * deriv_at(j)?;
        }
        Ok(acc)
    }

    /// Mean of `f` over one period, with `f` built from derivative callbacks.
    fn period_integral<F>(
        &self,
        analytic: impl Fn(&TrigSeries) -> TrigSeries,
        pointwise: F,
    ) -> Result<f64>
    where
        F: Fn(&Self, f64) -> Result<f64>,
    {
        let period = self.period.ok_or(Error::MissingPeriod)?;
        match &self.kind {
            // exact: the integrand is itself a finite series
            Kind::Analytic(s) => Ok(analytic(s).mean() * period),
            Kind::Sampled {
                t_start,
                dt,
                values,
            } => {
                // rectangle rule is spectrally accurate for periodic integrands
                let mut acc = 0.0;
                for i in 0..values.len() {
                    acc += pointwise(self, t_start + i as f64 * dt)?;
                }
                Ok(acc * dt)
            }
        }
    }
}

/// `d^order/dt^order` of `R^k` at `t`; units m^k/s^order.
pub fn nth_derivative(traj: &RadiusTrajectory, of: Power, order: usize, t: f64) -> Result<f64> {
    if !(1..=5).contains(&order) {
        return Err(Error::Differentiation(format!(
            "order {order} outside 1..=5"
        )));
    }
    match &traj.kind {
        Kind::Analytic(s) => Ok(s.powi(of.exponent()).derivative(order).eval(t)),
        Kind::Sampled { .. } => traj.sampled_derivative(of, order, t),
    }
}

fn check_index(n: f64) -> Result<f64> {
    require_positive("n", n)
}

fn eberlein_prefactor(n: f64) -> f64 {
    let n2 = n * n;
    EBERLEIN_FACTOR * (n2 - 1.0).powi(2) / n2
}

/// `1.16 (n²-1)²/n² · ħ/(480π c³) ∫ ∂⁵(R²) R β dt` over one period, β = Ṙ/c.
pub fn eberlein_energy_fifth_derivative_form(traj: &RadiusTrajectory, n: f64) -> Result<f64> {
    check_index(n)?;
    let integral = traj.period_integral(
        |s| s.powi(2).derivative(5).mul(s).mul(&s.derivative(1)),
        |tr, t| {
            Ok(nth_derivative(tr, Power::R2, 5, t)?
                * tr.radius(t)?
                * nth_derivative(tr, Power::R, 1, t)?)
        },
    )?;
    Ok(eberlein_prefactor(n) * HBAR / (480.0 * PI * C.powi(4)) * integral)
}

/// `1.16 (n²-1)²/n² · ħ/(960π c⁴) ∫ (∂³(R²))² dt` over one period.
pub fn eberlein_energy_by_parts_form(traj: &RadiusTrajectory, n: f64) -> Result<f64> {
    check_index(n)?;
    let integral = traj.period_integral(
        |s| {
            let d3 = s.powi(2).derivative(3);
            d3.mul(&d3)
        },
        |tr, t| Ok(nth_derivative(tr, Power::R2, 3, t)?.powi(2)),
    )?;
    Ok(eberlein_prefactor(n) * HBAR / (960.0 * PI * C.powi(4)) * integral)
}

/// `n²(n²-1)² · ħ/(1890π c⁶) ∫ (∂⁴(R³))² dt` over one period.
pub fn schutzhold_energy(traj: &RadiusTrajectory, n: f64) -> Result<f64> {
    check_index(n)?;
    let integral = traj.period_integral(
        |s| {
            let d4 = s.powi(3).derivative(4);
            d4.mul(&d4)
        },
        |tr, t| Ok(nth_derivative(tr, Power::R3, 4, t)?.powi(2)),
    )?;
    let n2 = n * n;
    Ok(n2 * (n2 - 1.0).powi(2) * HBAR / (1890.0 * PI * C.powi(6)) * integral)
}
