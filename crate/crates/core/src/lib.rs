//! Casimir forces and renormalized vacuum stress tensors for mirrors in
//! Rindler and conformally flat (FLRW, de Sitter) spacetimes.
//!
//! The crate is `no_std` and allocation free. Natural units `ħ = c = 1`
//! are used throughout: lengths and times carry the same unit, energies
//! and forces are pure inverse powers of length.
//!
//! Module map:
//!
//! * [`coords`]: Rindler/Minkowski geometry, mirror trajectories, the
//!   conformal coordinate `ξ`.
//! * [`reg`]: regularization of linear mode sums (damped sums,
//!   Euler–Maclaurin, `ζ(−1)`).
//! * [`rindler_cavity`]: the accelerated cavity, energy and pressure
//!   definitions of the Casimir force.
//! * [`anomaly`]: trace anomaly and the stress-tensor transformation law
//!   under `g = e^{2σ} η`.
//! * [`cosmo`]: FLRW (`k = 0`) curvature, de Sitter stress and force.
//!
//! [`jet`] and [`curvature`] are the numerical machinery underneath:
//! truncated Taylor arithmetic and a generic diagonal-metric curvature
//! engine that serves as the independent path for the closed forms.

#![no_std]
#![forbid(unsafe_code)]
// NaN must fail validation, so `!(x > 0.0)` is intended.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

#[cfg(test)]
extern crate std;

pub mod anomaly;
pub mod coords;
pub mod cosmo;
pub mod curvature;
pub mod error;
pub mod jet;
pub mod reg;
pub mod rindler_cavity;
pub mod tolerances;

pub use error::{Error, Result};
pub use tolerances::Tolerances;

/// Sign conventions in force, echoed into every run record.
pub const CONVENTION_NOTE: &str = "natural units hbar=c=1; signature (+-) in 2D, (+---) in 4D; \
     4D Riemann R^a_bcd = d_c G^a_bd - d_d G^a_bc + ..., so de Sitter R = -12 H^2; \
     2D Riemann with the opposite sign, so the trace anomaly is -R/(24 pi)";
