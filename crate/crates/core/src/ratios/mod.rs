//! Ratios of excitation-accompanied to plain photoionization and their
//! charge dependence.

mod coefficients;
mod curves;
mod kinematics;
mod scaled;
mod zseries;

pub use coefficients::{
    b_coefficients, decompose_b0, high_energy_limits, ratio_su_exact, B0Decomposition,
    ChannelCoefficients, Kappa, MuLinear, RatioCoefficients,
};
pub use curves::{ratio_curves, validity_guard_ev, CurveSample, OmegaGrid, OmegaScale, RatioCurve};
pub use kinematics::{
    coulomb_normalization, mu_at, stobbe_normalization, Kinematics, StobbeFactors,
};
pub use scaled::{closed_form_r_f, scaled_ratios, ScaledRatios};
pub use zseries::{fit_z_series, reference_c, SeriesFit, REFERENCE_C};
