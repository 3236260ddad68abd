//! Bound states of the spin-one Duffin–Kemmer–Petiau equation with a
//! nonminimal vector coupling, in a space whose momentum carries a nonzero
//! minimal uncertainty (`[X_i, P_j] = i(δ_ij + α X_i X_j)`).
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`model`]: physical parameters, quantum numbers and their validity rules.
//! - [`algebra`]: the exact 10×10 DKP matrices, the projector, and symbolic
//!   checks of the deformed position/momentum algebra.
//! - [`spectrum`]: closed-form energy levels for natural and unnatural parity.
//! - [`wavefunction`]: terminating hypergeometric eigenfunctions, the deformed
//!   norm, and residuals of the first-order radial system.
//! - [`oracle`]: an independent finite-volume eigensolver for the radial
//!   equations, used to cross-check every closed-form spectrum.
//!
//! Natural units `ħ = c = 1` are used throughout.

#![no_std]
// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod algebra;
mod error;
mod math;
pub mod model;
pub mod oracle;
pub mod quadrature;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
pub use model::{Branch, ModelParams, Parity, QuantumNumbers, Sector};
