//! Physical constants used at the API boundary.

/// Hartree energy in electron volts.
pub const HARTREE_EV: f64 = 27.211386;

pub fn ev_to_hartree(ev: f64) -> f64 {
    ev / HARTREE_EV
}

pub fn hartree_to_ev(hartree: f64) -> f64 {
    hartree * HARTREE_EV
}
