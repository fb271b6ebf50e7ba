//! Refractive-index pairs, the tanh permittivity profile and the sharp cutoff.
//!
//! The permittivity is specified as a function of pseudo-time
//! `tau = ∫ dt / ε(t)`:
//!
//! ```text
//! ε(τ) = a + b tanh(τ/τ₀),   a = (n_in² + n_out²)/2,   b = (n_out² - n_in²)/2
//! ```
//!
//! Physical time is anchored so that `t(0) = 0` at the profile midpoint.

use serde::Serialize;

use crate::error::{require_positive, Error, Result};
use crate::special::ln_cosh;

/// Initial and final refractive index of the medium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MediumPair {
    n_in: f64,
    n_out: f64,
}

impl MediumPair {
    pub fn new(n_in: f64, n_out: f64) -> Result<Self> {
        require_positive("n_in", n_in)?;
        require_positive("n_out", n_out)?;
        Ok(Self { n_in, n_out })
    }

    pub fn n_in(&self) -> f64 {
        self.n_in
    }

    pub fn n_out(&self) -> f64 {
        self.n_out
    }

    pub fn eps_in(&self) -> f64 {
        self.n_in * self.n_in
    }

    pub fn eps_out(&self) -> f64 {
        self.n_out * self.n_out
    }

    /// `n_in² + n_out²`, the combination that sets every timescale.
    pub fn eps_sum(&self) -> f64 {
        self.eps_in() + self.eps_out()
    }

    pub fn is_degenerate(&self) -> bool {
        self.n_in == self.n_out
    }

    pub fn swapped(&self) -> Self {
        Self {
            n_in: self.n_out,
            n_out: self.n_in,
        }
    }

    pub(crate) fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateProfile { n: self.n_in })
        } else {
            Ok(())
        }
    }
}

/// `ε(τ) = a + b tanh(τ/τ₀)` with the physical timescale `t₀` derived.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TanhProfile {
    media: MediumPair,
    tau0: f64,
}

impl TanhProfile {
    pub fn new(media: MediumPair, tau0: f64) -> Result<Self> {
        require_positive("tau0", tau0)?;
        Ok(Self { media, tau0 })
    }

    /// Build from the physical timescale: `τ₀ = 2 t₀ / (n_in² + n_out²)`.
    pub fn from_t0(media: MediumPair, t0: f64) -> Result<Self> {
        require_positive("t0", t0)?;
        Self::new(media, 2.0 * t0 / media.eps_sum())
    }

    pub fn media(&self) -> MediumPair {
        self.media
    }

    pub fn tau0(&self) -> f64 {
        self.tau0
    }

    /// `t₀ = τ₀ dt/dτ|₀ = ½ τ₀ (n_in² + n_out²)`.
    pub fn t0(&self) -> f64 {
        0.5 * self.tau0 * self.media.eps_sum()
    }

    /// Midpoint permittivity `a`.
    pub fn midpoint(&self) -> f64 {
        0.5 * self.media.eps_sum()
    }

    /// Half-swing `b`; negative when the index drops.
    pub fn half_swing(&self) -> f64 {
        0.5 * (self.media.eps_out() - self.media.eps_in())
    }

    pub fn epsilon(&self, tau: f64) -> f64 {
        self.midpoint() + self.half_swing() * (tau / self.tau0).tanh()
    }

    /// Physical time `t(τ) = a τ + b τ₀ ln cosh(τ/τ₀)`, with `t(0) = 0`.
    pub fn physical_time(&self, tau: f64) -> f64 {
        self.midpoint() * tau + self.half_swing() * self.tau0 * ln_cosh(tau / self.tau0)
    }
}

/// Schwinger-style sharp wavenumber cutoff.
///
/// `k` is the cutoff inside the final medium; `k_observed` is what is
/// measured after the photons leave into the ambient liquid:
/// `k = (n_out / n_liquid) k_observed`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpCutoff {
    k: f64,
    k_observed: f64,
    n_liquid: f64,
}

impl SharpCutoff {
    pub fn from_observed(k_observed: f64, n_liquid: f64, n_out: f64) -> Result<Self> {
        require_positive("k_observed", k_observed)?;
        require_positive("n_out", n_out)?;
        let n_liquid = check_liquid(n_liquid)?;
        Ok(Self {
            k: k_observed * (n_out / n_liquid),
            k_observed,
            n_liquid,
        })
    }

    /// Cutoff given directly as an observed vacuum wavelength, `K = 2π/λ`.
    pub fn from_observed_wavelength(lambda: f64, n_liquid: f64, n_out: f64) -> Result<Self> {
        require_positive("wavelength", lambda)?;
        Self::from_observed(2.0 * std::f64::consts::PI / lambda, n_liquid, n_out)
    }

    pub fn from_medium(k: f64, n_liquid: f64, n_out: f64) -> Result<Self> {
        require_positive("k", k)?;
        require_positive("n_out", n_out)?;
        let n_liquid = check_liquid(n_liquid)?;
        Ok(Self {
            k,
            // same ratio as from_observed, so the round trip stays within 1 ulp
            k_observed: k / (n_out / n_liquid),
            n_liquid,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn k_observed(&self) -> f64 {
        self.k_observed
    }

    pub fn n_liquid(&self) -> f64 {
        self.n_liquid
    }
}

fn check_liquid(n_liquid: f64) -> Result<f64> {
    if n_liquid.is_finite() && n_liquid >= 1.0 {
        Ok(n_liquid)
    } else {
        Err(Error::InvalidParameter {
            name: "n_liquid",
            value: n_liquid,
            reason: "must be finite and >= 1",
        })
    }
}
