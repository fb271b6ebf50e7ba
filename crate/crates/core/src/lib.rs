//! Photon production from a time-dependent refractive index.
//!
//! The crate covers the whole calculational chain for the dynamical Casimir
//! effect in a homogeneous dielectric whose permittivity switches between two
//! values on a finite timescale:
//!
//! - [`media`]: refractive-index pairs, the tanh permittivity profile and the
//!   pseudo-time transform, the sharp wavenumber cutoff.
//! - [`bogolubov`]: exact, sudden and adiabatic squared Bogolubov
//!   coefficients, regime thresholds.
//! - [`spectrum`]: emitted number spectra, photon/energy budgets, the Planck
//!   comparison curve and spectral integration.
//! - [`casimir_static`]: quasi-static bulk Casimir energy and photon number.
//! - [`eos`]: hard-core equations of state and sound speeds.
//! - [`adiabatic_emitters`]: radiated-energy functionals for a moving bubble wall.
//! - [`inverse_solver`]: refractive-index jumps from a photon count.
//!
//! All quantities are SI. Angular frequencies are rad/s and wavenumbers rad/m.

pub mod adiabatic_emitters;
pub mod bogolubov;
pub mod casimir_static;
pub mod consts;
pub mod eos;
pub mod error;
pub mod inverse_solver;
pub mod media;
pub mod quadrature;
pub mod special;
pub mod spectrum;

pub use bogolubov::{ModeAmplitudes, Regime, RegimeThresholds};
pub use error::{Error, Result};
pub use media::{MediumPair, SharpCutoff, TanhProfile};
pub use spectrum::{PhotonBudget, SpectrumRow, SpectrumTable};
