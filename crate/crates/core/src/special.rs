//! Overflow-safe hyperbolic logarithms.
//!
//! The Bogolubov densities are ratios of hyperbolic sines whose arguments
//! reach thousands at high frequency, far past the point where `sinh`
//! overflows. Everything downstream works with logarithms and splits
//! `ln sinh x` into its linear part `x - ln 2` and a bounded remainder
//! `ln(1 - e^{-2x})`, so that linear parts can be cancelled exactly.

use std::f64::consts::LN_2;

/// `ln cosh x`, finite for every finite `x`.
pub fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    if a > 20.0 {
        a + (-2.0 * a).exp().ln_1p() - LN_2
    } else {
        a.cosh().ln()
    }
}

/// `ln(1 - e^{-2x})` for `x > 0`.
///
/// This is `ln sinh x - (x - ln 2)`. It tends to `ln 2x` as `x -> 0` and to
/// `-e^{-2x}` as `x -> inf`.
pub fn ln_sinh_remainder(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let e = (-2.0 * x).exp();
    if e < 0.5 {
        (-e).ln_1p()
    } else {
        (-(-2.0 * x).exp_m1()).ln()
    }
}

/// `ln sinh x` for `x > 0`.
pub fn ln_sinh(x: f64) -> f64 {
    if x < 1e-2 {
        // sinh x / x = 1 + x^2/6 + x^4/120 + x^6/5040 + ...
        let x2 = x * x;
        x.ln() + (x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0))).ln_1p()
    } else {
        x - LN_2 + ln_sinh_remainder(x)
    }
}

/// `ln(sinh x / x)` for `x > 0`; accurate to a few ulps near zero.
pub fn ln_sinhc(x: f64) -> f64 {
    if x <= 1.0 {
        // sinh x / x - 1 = Σ_{k≥1} x^{2k} / (2k+1)!
        let x2 = x * x;
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..=12 {
            term *= x2 / ((2 * k) as f64 * (2 * k + 1) as f64);
            sum += term;
        }
        sum.ln_1p()
    } else {
        ln_sinh(x) - x.ln()
    }
}
