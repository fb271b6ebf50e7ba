//! Quasi-static bulk Casimir energy of a dielectric bubble.
//!
//! Only the leading volume term is kept; surface and curvature corrections
//! (the `+ ...` of the bulk expansion) are not modelled. Both polarizations
//! are included.

use std::f64::consts::PI;

use serde::Serialize;

use crate::consts::{C, HBAR};
use crate::error::{require_positive, Result};
use crate::quadrature::{integrate, QuadOptions};

/// Inputs and outputs of the static estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StaticBudget {
    /// J; positive when the inside is optically thinner.
    pub e_cavity: f64,
    pub n_static: f64,
    /// rad/m
    pub k: f64,
    /// m
    pub r: f64,
    pub eps_inside: f64,
    pub eps_outside: f64,
}

impl StaticBudget {
    pub fn new(eps_inside: f64, eps_outside: f64, r: f64, k: f64) -> Result<Self> {
        Ok(Self {
            e_cavity: schwinger_energy(eps_inside, eps_outside, r, k)?,
            n_static: schwinger_number(eps_inside, eps_outside, r, k)?,
            k,
            r,
            eps_inside,
            eps_outside,
        })
    }

    /// Number of photons of energy `photon_energy` (J) the static energy could pay for.
    pub fn photon_equivalent(&self, photon_energy: f64) -> Result<f64> {
        require_positive("photon_energy", photon_energy)?;
        Ok(self.e_cavity / photon_energy)
    }
}

fn check(eps_inside: f64, eps_outside: f64, r: f64, k: f64) -> Result<()> {
    require_positive("eps_inside", eps_inside)?;
    require_positive("eps_outside", eps_outside)?;
    require_positive("radius", r)?;
    require_positive("k", k)?;
    Ok(())
}

/// `E = (1/6π) ħ c R³ K⁴ (1/√ε_inside - 1/√ε_outside)`.
pub fn schwinger_energy(eps_inside: f64, eps_outside: f64, r: f64, k: f64) -> Result<f64> {
    check(eps_inside, eps_outside, r, k)?;
    let k2 = k * k;
    Ok(
        HBAR * C * r * r * r * k2 * k2 * (eps_inside.sqrt().recip() - eps_outside.sqrt().recip())
            / (6.0 * PI),
    )
}

/// `N = (2/9π) (R K)³ (√ε_outside / √ε_inside - 1)`.
pub fn schwinger_number(eps_inside: f64, eps_outside: f64, r: f64, k: f64) -> Result<f64> {
    check(eps_inside, eps_outside, r, k)?;
    let rk = r * k;
    Ok(2.0 / (9.0 * PI) * rk * rk * rk * ((eps_outside / eps_inside).sqrt() - 1.0))
}

/// `E = 2V ∫_{|k|<K} d³k/(2π)³ · ½ħ [ω_inside(k) - ω_outside(k)]`
/// for arbitrary dispersion relations (rad/s as a function of rad/m).
pub fn general_dispersion_energy<Fi, Fo>(
    omega_inside: Fi,
    omega_outside: Fo,
    volume: f64,
    k: f64,
) -> Result<f64>
where
    Fi: Fn(f64) -> f64,
    Fo: Fn(f64) -> f64,
{
    require_positive("volume", volume)?;
    require_positive("k", k)?;
    // 2V · 4π/(2π)³ · ½ħ = V ħ / (2π²)
    let q = integrate(
        |q| q * q * (omega_inside(q) - omega_outside(q)),
        0.0,
        k,
        QuadOptions {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_intervals: 2000,
        },
    )?;
    Ok(volume * HBAR / (2.0 * PI * PI) * q.value)
}
