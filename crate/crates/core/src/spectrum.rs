//! Emitted-photon spectra and photon/energy budgets.
//!
//! The number spectrum in the final medium, both polarizations included, is
//!
//! ```text
//! dN/dω = |β(ω)|² · 2V/(2π)³ · 4π ω² n_out³ / c³
//! ```
//!
//! With a sharp cutoff `K` in the final medium and the sudden-limit `|β|²`,
//! everything integrates in closed form:
//!
//! ```text
//! N = (n_out - n_in)² / (n_in n_out) · V K³ / (12π²)
//! E = (n_out - n_in)² / (n_in n_out²) · ħ c K · V K³ / (16π²) = ¾ N ħ ω_max
//! ```
//!
//! with `ω_max = c K / n_out`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bogolubov::{self, Regime, RegimeThresholds};
use crate::consts::{C, HBAR};
use crate::error::{require_positive, Error, Result};
use crate::media::{MediumPair, SharpCutoff, TanhProfile};
use crate::quadrature::{integrate, QuadOptions};

/// Phase-space weight `2V/(2π)³ · 4π ω² n_out³ / c³` multiplying `|β|²`.
pub fn phase_space_weight(n_out: f64, volume: f64, omega_out: f64) -> f64 {
    let n3 = n_out * n_out * n_out;
    2.0 * volume / (8.0 * PI * PI * PI) * 4.0 * PI * omega_out * omega_out * n3 / (C * C * C)
}

/// Exact number spectrum `dN/dω_out` (photons per rad/s).
pub fn number_spectrum_exact(profile: &TanhProfile, volume: f64, omega_out: f64) -> Result<f64> {
    require_positive("volume", volume)?;
    let beta_sq = bogolubov::beta_sq_exact(profile, omega_out)?;
    Ok(beta_sq * phase_space_weight(profile.media().n_out(), volume, omega_out))
}

/// Sudden-limit number spectrum, optionally truncated at the sharp cutoff
/// `ω_max = c K / n_out`.
pub fn number_spectrum_sudden(
    media: &MediumPair,
    volume: f64,
    omega_out: f64,
    cutoff: Option<&SharpCutoff>,
) -> Result<f64> {
    require_positive("volume", volume)?;
    require_positive("omega_out", omega_out)?;
    if let Some(c) = cutoff {
        if omega_out > omega_max(media, c) {
            return Ok(0.0);
        }
    }
    Ok(bogolubov::beta_sq_sudden(media) * phase_space_weight(media.n_out(), volume, omega_out))
}

/// Highest emitted angular frequency under a sharp cutoff, `c K / n_out`.
pub fn omega_max(media: &MediumPair, cutoff: &SharpCutoff) -> f64 {
    C * cutoff.k() / media.n_out()
}

/// `k_B T` (J) of the comparison blackbody:
/// `ħ (n_in²+n_out²) / (4π t₀ n_out min{n_in, n_out, ½|n_in-n_out|})`.
pub fn planck_temperature(profile: &TanhProfile) -> Result<f64> {
    let m = profile.media();
    m.require_nondegenerate()?;
    let lo = m
        .n_in()
        .min(m.n_out())
        .min(0.5 * (m.n_in() - m.n_out()).abs());
    Ok(HBAR * m.eps_sum() / (4.0 * PI * profile.t0() * m.n_out() * lo))
}

/// Planck-shaped comparison curve `normalization · ω² / (e^{ħω/k_BT} - 1)`.
pub fn planck_comparison_spectrum(
    profile: &TanhProfile,
    omega_out: f64,
    normalization: f64,
) -> Result<f64> {
    require_positive("omega_out", omega_out)?;
    let kt = planck_temperature(profile)?;
    let x = HBAR * omega_out / kt;
    Ok(normalization * omega_out * omega_out / x.exp_m1())
}

/// Photon count for a spherical bubble of radius `radius`:
/// `(1/9π) (n_out - n_in)² / n_in · n_out² · (R K_observed / n_liquid)³`.
pub fn photon_count_sharp_cutoff(
    media: &MediumPair,
    radius: f64,
    cutoff: &SharpCutoff,
) -> Result<f64> {
    require_positive("radius", radius)?;
    let d = media.n_out() - media.n_in();
    let x = radius * cutoff.k_observed() / cutoff.n_liquid();
    Ok(d * d / media.n_in() * media.n_out() * media.n_out() * x * x * x / (9.0 * PI))
}

/// Photon number, energy and spectral reach of a sudden transition with a sharp cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhotonBudget {
    pub n: f64,
    /// Total emitted energy, J.
    pub energy: f64,
    /// Mean photon energy, J.
    pub mean_energy: f64,
    /// rad/s
    pub omega_max: f64,
}

pub fn photon_budget_sharp_cutoff(
    media: &MediumPair,
    volume: f64,
    cutoff: &SharpCutoff,
) -> Result<PhotonBudget> {
    require_positive("volume", volume)?;
    let (n_in, n_out) = (media.n_in(), media.n_out());
    let d2 = (n_out - n_in) * (n_out - n_in);
    let k = cutoff.k();
    let vk3 = volume * k * k * k;
    let n = d2 / (n_in * n_out) * vk3 / (12.0 * PI * PI);
    let energy = d2 / (n_in * n_out * n_out) * HBAR * C * k * vk3 / (16.0 * PI * PI);
    Ok(PhotonBudget {
        n,
        energy,
        mean_energy: if n > 0.0 {
            0.75 * HBAR * C * k / n_out
        } else {
            0.0
        },
        omega_max: omega_max(media, cutoff),
    })
}

/// Result of integrating a number spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumIntegral {
    pub n: f64,
    /// J
    pub energy: f64,
    pub n_rel_error: f64,
    pub energy_rel_error: f64,
}

/// `N = ∫ dN/dω dω` and `E = ħ ∫ ω dN/dω dω` over `[omega_lo, omega_hi]`.
///
/// `rel_tol` must lie in `[1e-12, 1e-3]`.
pub fn integrate_spectrum<F>(
    dn_domega: F,
    omega_lo: f64,
    omega_hi: f64,
    rel_tol: f64,
) -> Result<SpectrumIntegral>
where
    F: Fn(f64) -> f64,
{
    if !(1e-12..=1e-3).contains(&rel_tol) {
        return Err(Error::InvalidParameter {
            name: "rel_tol",
            value: rel_tol,
            reason: "must lie in [1e-12, 1e-3]",
        });
    }
    if !(omega_lo >= 0.0 && omega_hi > omega_lo && omega_hi.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "omega_hi",
            value: omega_hi,
            reason: "range must satisfy 0 <= omega_lo < omega_hi < inf",
        });
    }
    let opts = QuadOptions::with_rel_tol(rel_tol);
    let n = integrate(&dn_domega, omega_lo, omega_hi, opts)?;
    let e = integrate(|w| HBAR * w * dn_domega(w), omega_lo, omega_hi, opts)?;
    Ok(SpectrumIntegral {
        n: n.value,
        energy: e.value,
        n_rel_error: n.rel_error(),
        energy_rel_error: e.rel_error(),
    })
}

/// Upper integration limit beyond which the exact spectrum is negligible:
/// where the adiabatic envelope has fallen by `e^{-60}`, and never below
/// `100 Ω_adiabatic`.
pub fn exact_spectrum_reach(profile: &TanhProfile) -> Result<f64> {
    let th = bogolubov::regime_thresholds(profile)?;
    Ok((60.0 / bogolubov::adiabatic_decay_rate(profile)).max(100.0 * th.omega_adiabatic))
}

/// One sampled row of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumRow {
    /// rad/s
    pub omega_out: f64,
    /// photons per rad/s (or per rad/s per m³ for per-volume tables)
    pub dn_domega: f64,
    pub regime: Regime,
}

/// Sampled exact spectrum with the metadata needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumTable {
    pub profile: TanhProfile,
    pub volume: f64,
    pub cutoff: Option<SharpCutoff>,
    pub thresholds: RegimeThresholds,
    pub rows: Vec<SpectrumRow>,
}

impl SpectrumTable {
    /// Evaluate the exact spectrum on `omegas`, which must be strictly
    /// increasing and positive. Frequencies above the cutoff's `ω_max` are
    /// zeroed.
    pub fn sample(
        profile: TanhProfile,
        volume: f64,
        cutoff: Option<SharpCutoff>,
        omegas: &[f64],
    ) -> Result<Self> {
        require_positive("volume", volume)?;
        let thresholds = bogolubov::regime_thresholds(&profile)?;
        if let Some(w) = omegas.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter {
                name: "omega grid",
                value: w[1],
                reason: "frequencies must be strictly increasing",
            });
        }
        let media = profile.media();
        let w_max = cutoff.as_ref().map(|c| omega_max(&media, c));
        let rows = omegas
            .iter()
            .map(|&w| {
                let dn = match w_max {
                    Some(m) if w > m => {
                        require_positive("omega_out", w)?;
                        0.0
                    }
                    _ => number_spectrum_exact(&profile, volume, w)?,
                };
                Ok(SpectrumRow {
                    omega_out: w,
                    dn_domega: dn,
                    regime: thresholds.classify(w),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            profile,
            volume,
            cutoff,
            thresholds,
            rows,
        })
    }

    /// Divide every row by the volume ("photons per unit volume").
    pub fn per_unit_volume(mut self) -> Self {
        for r in &mut self.rows {
            r.dn_domega /= self.volume;
        }
        self
    }

    /// Row with the largest `dN/dω`.
    pub fn peak(&self) -> Option<&SpectrumRow> {
        self.rows
            .iter()
            .max_by(|a, b| a.dn_domega.total_cmp(&b.dn_domega))
    }
}

/// `points` log-spaced frequencies from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    require_positive("omega_min", lo)?;
    check_grid(lo, hi, points)?;
    if points == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.ln(), hi.ln());
    let step = (b - a) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            if i == points - 1 {
                hi
            } else {
                (a + step * i as f64).exp()
            }
        })
        .collect())
}

/// `points` evenly spaced frequencies from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    require_positive("omega_min", lo)?;
    check_grid(lo, hi, points)?;
    if points == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            if i == points - 1 {
                hi
            } else {
                lo + step * i as f64
            }
        })
        .collect())
}

fn check_grid(lo: f64, hi: f64, points: usize) -> Result<()> {
    if points == 0 {
        return Err(Error::InvalidParameter {
            name: "points",
            value: 0.0,
            reason: "need at least one point",
        });
    }
    if !(hi.is_finite() && (hi > lo || (points == 1 && hi == lo))) {
        return Err(Error::InvalidParameter {
            name: "omega_max",
            value: hi,
            reason: "must be finite and exceed omega_min",
        });
    }
    Ok(())
}
