//! Squared Bogolubov coefficients for the tanh permittivity profile.
//!
//! For a mode of wavenumber `k` the pseudo-time frequencies are
//! `ω^τ_in = c k n_in`, `ω^τ_out = c k n_out` and `ω^τ_± = ½ c k |n_in ± n_out|`,
//! and the exact per-mode densities are
//!
//! ```text
//! |β|² = sinh²(π ω^τ_- τ₀) / [sinh(π ω^τ_in τ₀) sinh(π ω^τ_out τ₀)]
//! |α|² = sinh²(π ω^τ_+ τ₀) / [sinh(π ω^τ_in τ₀) sinh(π ω^τ_out τ₀)]
//! ```
//!
//! Values returned here are the coefficients multiplying `V/(2π)³ δ³(k_in ± k_out)`;
//! volume and phase-space factors are applied in [`crate::spectrum`].
//!
//! Evaluation is in log space. Writing `ln sinh x = x - ln 2 + ln(1 - e^{-2x})`,
//! the linear parts of `ln |α|²` cancel identically and those of `ln |β|²` sum to
//! `-2π τ₀ c k min(n_in, n_out)`, so only bounded remainders are evaluated
//! numerically. This keeps the result finite and accurate for arguments far
//! beyond the `sinh` overflow point.

use std::f64::consts::PI;

use serde::Serialize;

use crate::consts::C;
use crate::error::{require_positive, Result};
use crate::media::{MediumPair, TanhProfile};
use crate::special::{ln_sinh_remainder, ln_sinhc};

/// Below this largest sinh argument the coefficients are written as the
/// sudden-limit value times a correction factor.
const SMALL_ARGUMENT: f64 = 1.0;

/// Frequencies and squared coefficients of one mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeAmplitudes {
    /// Wavenumber, rad/m.
    pub k: f64,
    pub omega_tau_in: f64,
    pub omega_tau_out: f64,
    pub omega_tau_plus: f64,
    pub omega_tau_minus: f64,
    /// Physical frequency in the initial medium, `c k / n_in`.
    pub omega_in: f64,
    /// Physical frequency in the final medium, `c k / n_out`.
    pub omega_out: f64,
    pub alpha_sq: f64,
    pub beta_sq: f64,
}

/// Pseudo-time sinh arguments `π ω^τ τ₀` of one mode.
#[derive(Debug, Clone, Copy)]
struct Arguments {
    plus: f64,
    minus: f64,
    inn: f64,
    out: f64,
    /// `2π τ₀ c k min(n_in, n_out)`; minus the linear part of `ln |β|²`.
    decay: f64,
}

impl Arguments {
    fn new(profile: &TanhProfile, omega_out: f64) -> Self {
        // k = n_out ω_out / c
        let m = profile.media();
        Self::from_scaled_wavenumber(profile, PI * profile.tau0() * m.n_out() * omega_out)
    }

    /// `s = π τ₀ c k`.
    fn from_scaled_wavenumber(profile: &TanhProfile, s: f64) -> Self {
        let m = profile.media();
        Self {
            plus: 0.5 * s * (m.n_in() + m.n_out()),
            minus: 0.5 * s * (m.n_in() - m.n_out()).abs(),
            inn: s * m.n_in(),
            out: s * m.n_out(),
            decay: 2.0 * s * m.n_in().min(m.n_out()),
        }
    }

    fn ln_beta_sq(&self) -> f64 {
        // the in/out sum is formed first so that swapping the media is bit-exact
        -self.decay + 2.0 * ln_sinh_remainder(self.minus)
            - (ln_sinh_remainder(self.inn) + ln_sinh_remainder(self.out))
    }

    fn ln_alpha_sq(&self) -> f64 {
        2.0 * ln_sinh_remainder(self.plus)
            - (ln_sinh_remainder(self.inn) + ln_sinh_remainder(self.out))
    }

    /// `ln(|β|² / |β|²_sudden)`, never positive.
    fn ln_beta_correction(&self) -> f64 {
        2.0 * ln_sinhc(self.minus) - (ln_sinhc(self.inn) + ln_sinhc(self.out))
    }

    fn ln_alpha_correction(&self) -> f64 {
        2.0 * ln_sinhc(self.plus) - (ln_sinhc(self.inn) + ln_sinhc(self.out))
    }

    fn is_small(&self) -> bool {
        self.max() <= SMALL_ARGUMENT
    }

    fn beta_sq(&self, media: &MediumPair) -> f64 {
        if self.minus == 0.0 {
            0.0
        } else if self.is_small() {
            // sudden value times exp(≤ 0): the sudden bound survives rounding
            beta_sq_sudden(media) * self.ln_beta_correction().exp()
        } else {
            self.ln_beta_sq().exp()
        }
    }

    fn alpha_sq(&self, media: &MediumPair) -> f64 {
        if self.is_small() {
            alpha_sq_sudden(media) * self.ln_alpha_correction().exp()
        } else {
            self.ln_alpha_sq().exp()
        }
    }

    fn max(&self) -> f64 {
        self.plus.max(self.inn).max(self.out)
    }
}

fn check_omega(omega_out: f64) -> Result<f64> {
    require_positive("omega_out", omega_out)
}

/// Exact `|β|²` at physical output frequency `omega_out` (rad/s).
pub fn beta_sq_exact(profile: &TanhProfile, omega_out: f64) -> Result<f64> {
    check_omega(omega_out)?;
    Ok(Arguments::new(profile, omega_out).beta_sq(&profile.media()))
}

/// `ln |β|²` at `omega_out`; stays finite where `|β|²` underflows.
/// Equal media give `-inf`.
pub fn ln_beta_sq_exact(profile: &TanhProfile, omega_out: f64) -> Result<f64> {
    check_omega(omega_out)?;
    let args = Arguments::new(profile, omega_out);
    if args.minus == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    if args.is_small() {
        return Ok(beta_sq_sudden(&profile.media()).ln() + args.ln_beta_correction());
    }
    Ok(args.ln_beta_sq())
}

/// Exact `|β|²` for a mode of wavenumber `k` (rad/m).
pub fn beta_sq_at_wavenumber(profile: &TanhProfile, k: f64) -> Result<f64> {
    require_positive("k", k)?;
    let args = Arguments::from_scaled_wavenumber(profile, PI * profile.tau0() * C * k);
    Ok(args.beta_sq(&profile.media()))
}

/// Exact `|α|²` at physical output frequency `omega_out` (rad/s).
pub fn alpha_sq_exact(profile: &TanhProfile, omega_out: f64) -> Result<f64> {
    check_omega(omega_out)?;
    Ok(Arguments::new(profile, omega_out).alpha_sq(&profile.media()))
}

/// Largest sinh argument entering the exact coefficients at `omega_out`.
pub fn max_sinh_argument(profile: &TanhProfile, omega_out: f64) -> f64 {
    Arguments::new(profile, omega_out).max()
}

/// All frequencies and both squared coefficients for one mode.
pub fn mode_amplitudes(profile: &TanhProfile, omega_out: f64) -> Result<ModeAmplitudes> {
    let m = profile.media();
    let k = m.n_out() * check_omega(omega_out)? / C;
    let ck = C * k;
    Ok(ModeAmplitudes {
        k,
        omega_tau_in: ck * m.n_in(),
        omega_tau_out: ck * m.n_out(),
        omega_tau_plus: 0.5 * ck * (m.n_in() + m.n_out()),
        omega_tau_minus: 0.5 * ck * (m.n_in() - m.n_out()).abs(),
        omega_in: ck / m.n_in(),
        omega_out: ck / m.n_out(),
        alpha_sq: alpha_sq_exact(profile, omega_out)?,
        beta_sq: beta_sq_exact(profile, omega_out)?,
    })
}

/// Sudden-limit `|β|² = ¼ (n_in - n_out)² / (n_in n_out)`, frequency independent.
pub fn beta_sq_sudden(media: &MediumPair) -> f64 {
    let d = media.n_in() - media.n_out();
    0.25 * d * d / (media.n_in() * media.n_out())
}

/// Sudden-limit `|α|² = ¼ (n_in + n_out)² / (n_in n_out)`.
pub fn alpha_sq_sudden(media: &MediumPair) -> f64 {
    let s = media.n_in() + media.n_out();
    0.25 * s * s / (media.n_in() * media.n_out())
}

/// Adiabatic envelope `exp(-4π min(n_in, n_out) n_out ω_out t₀ / (n_in² + n_out²))`.
///
/// Only meaningful above [`RegimeThresholds::omega_adiabatic`]. Defined for
/// `omega_out >= 0`.
pub fn beta_sq_adiabatic(profile: &TanhProfile, omega_out: f64) -> Result<f64> {
    if !(omega_out.is_finite() && omega_out >= 0.0) {
        return Err(crate::Error::InvalidParameter {
            name: "omega_out",
            value: omega_out,
            reason: "must be finite and non-negative",
        });
    }
    Ok((-adiabatic_decay_rate(profile) * omega_out).exp())
}

/// E-folding rate of `|β|²` in `omega_out` deep in the adiabatic regime, s.
pub fn adiabatic_decay_rate(profile: &TanhProfile) -> f64 {
    let m = profile.media();
    4.0 * PI * m.n_in().min(m.n_out()) * m.n_out() * profile.t0() / m.eps_sum()
}

/// Angular-frequency thresholds bounding the sudden and adiabatic regimes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeThresholds {
    /// rad/s
    pub omega_sudden: f64,
    /// rad/s
    pub omega_adiabatic: f64,
}

/// `Ω_sudden = (n_in²+n_out²) / (2π t₀ n_out max{n_in,n_out})` and
/// `Ω_adiabatic = (n_in²+n_out²) / (2π t₀ n_out min{n_in,n_out,½|n_in-n_out|})`.
///
/// `n_out` enters asymmetrically, so swapping the media changes both values.
pub fn regime_thresholds(profile: &TanhProfile) -> Result<RegimeThresholds> {
    let m = profile.media();
    m.require_nondegenerate()?;
    let scale = m.eps_sum() / (2.0 * PI * profile.t0() * m.n_out());
    let hi = m.n_in().max(m.n_out());
    let lo = m
        .n_in()
        .min(m.n_out())
        .min(0.5 * (m.n_in() - m.n_out()).abs());
    Ok(RegimeThresholds {
        omega_sudden: scale / hi,
        omega_adiabatic: scale / lo,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Sudden,
    Transition,
    Adiabatic,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Sudden => "sudden",
            Regime::Transition => "transition",
            Regime::Adiabatic => "adiabatic",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl RegimeThresholds {
    pub fn classify(&self, omega_out: f64) -> Regime {
        let (lo, hi) = if self.omega_sudden <= self.omega_adiabatic {
            (self.omega_sudden, self.omega_adiabatic)
        } else {
            // empty transition band: split at the geometric mean
            let g = (self.omega_sudden * self.omega_adiabatic).sqrt();
            (g, g)
        };
        if omega_out < lo {
            Regime::Sudden
        } else if omega_out > hi {
            Regime::Adiabatic
        } else if lo == hi {
            Regime::Adiabatic
        } else {
            Regime::Transition
        }
    }
}

pub fn classify_regime(profile: &TanhProfile, omega_out: f64) -> Result<Regime> {
    Ok(regime_thresholds(profile)?.classify(omega_out))
}
