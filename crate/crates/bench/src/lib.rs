//! Shared fixtures for the kernel benchmarks.

use dce_core::{MediumPair, TanhProfile};

/// Water-to-air style profile with t₀ = 1 fs.
pub fn reference_profile() -> TanhProfile {
    TanhProfile::from_t0(MediumPair::new(1.33, 1.0).expect("valid indices"), 1e-15)
        .expect("valid t0")
}

/// `n` log-spaced angular frequencies between 1e13 and 1e17 rad/s.
pub fn omega_grid(n: usize) -> Vec<f64> {
    dce_core::spectrum::log_grid(1e13, 1e17, n).expect("valid grid")
}
