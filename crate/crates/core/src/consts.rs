//! Physical constants (CODATA 2018, exact where the SI defines them).

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum, m/s.
pub const C: f64 = 299_792_458.0;
/// Boltzmann constant, J/K.
pub const K_B: f64 = 1.380_649e-23;
/// Avogadro constant, 1/mol.
pub const N_A: f64 = 6.022_140_76e23;
/// One electronvolt in joules.
pub const EV: f64 = 1.602_176_634e-19;
