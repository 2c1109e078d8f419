//! Ratios of photoionization-with-excitation to plain photoionization cross
//! sections for helium and heliumlike ions at intermediate photon energies.
//!
//! The pipeline runs bottom-up:
//!
//! 1. [`wavefunction`] builds a correlated Hylleraas ground state and exposes
//!    its value and derivatives at the electron–nucleus coalescence point.
//! 2. [`coulomb`] supplies the hydrogenic orbitals of the residual ion.
//! 3. [`elements`] integrates the coalescence data against those orbitals to
//!    produce the shake-up, initial-state and final-state matrix elements.
//! 4. [`ratios`] assembles high-energy limits, 1/ω coefficients, energy
//!    dependent ratio curves, the Z⁻¹ series fit and the Z-scaled ratios.
//!
//! Atomic units throughout, except at the photon-energy API boundary where
//! energies are given in eV.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coulomb;
pub mod elements;
pub mod error;
pub mod linalg;
pub mod quadrature;
pub mod ratios;
pub mod units;
pub mod wavefunction;

pub use error::{Error, Result};
