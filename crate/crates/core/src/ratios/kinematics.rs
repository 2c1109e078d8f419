use std::f64::consts::PI;

use crate::coulomb::excitation_energy;
use crate::error::{Error, Result};
use crate::units::ev_to_hartree;

/// Momenta and Sommerfeld parameters for a photon of energy ω leaving the
/// ion in shell n. The fast electron's momentum obeys p² = 2ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics {
    /// Photon energy, hartree.
    pub omega: f64,
    pub z: f64,
    pub n: u32,
    pub p: f64,
    /// √(p² − 2δₙ)
    pub p_n: f64,
    /// Electron–electron parameter 1/p, so ξ² = 1/(2ω).
    pub xi: f64,
    /// Z/p
    pub xi_z: f64,
    /// Z/pₙ
    pub xi_z_n: f64,
    /// πξ_Z
    pub mu: f64,
}

impl Kinematics {
    pub fn new(omega_ev: f64, z: f64, n: u32) -> Result<Self> {
        Self::from_hartree(ev_to_hartree(omega_ev), z, n)
    }

    pub fn from_hartree(omega: f64, z: f64, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("shell index n must be at least 1".into()));
        }
        if !(z > 0.0) {
            return Err(Error::InvalidInput(format!("nuclear charge must be positive, got {z}")));
        }
        let delta = excitation_energy(n, z);
        let threshold = delta + 0.5 * z * z;
        if !(omega > threshold) {
            return Err(Error::ClosedChannel {
                n,
                omega_hartree: omega,
                threshold_hartree: threshold,
            });
        }
        let p = (2.0 * omega).sqrt();
        let p_n = (2.0 * omega - 2.0 * delta).sqrt();
        Ok(Self {
            omega,
            z,
            n,
            p,
            p_n,
            xi: 1.0 / p,
            xi_z: z / p,
            xi_z_n: z / p_n,
            mu: PI * z / p,
        })
    }
}

/// πξ_Z at photon energy `omega_ev` for charge `z`; needs no open-channel check.
pub fn mu_at(omega_ev: f64, z: f64) -> f64 {
    PI * z / (2.0 * ev_to_hartree(omega_ev)).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StobbeFactors {
    /// N² = h(πξ) e^{−πξ}
    pub n_sq: f64,
    /// h(πξ) with h(x) = 2x / (eˣ + e⁻ˣ)
    pub h: f64,
}

/// Continuum normalization in the h-function form, for diagnostics.
pub fn stobbe_normalization(xi: f64) -> Result<StobbeFactors> {
    if !(xi > 0.0) {
        return Err(Error::InvalidInput(format!("Sommerfeld parameter must be positive, got {xi}")));
    }
    let x = PI * xi;
    let h = 2.0 * x / (x.exp() + (-x).exp());
    Ok(StobbeFactors {
        n_sq: h * (-x).exp(),
        h,
    })
}

/// The Coulomb-wave form 2πξ / (e^{2πξ} − 1), for comparison with
/// [`stobbe_normalization`]; the two differ in the sign inside the
/// denominator and neither enters any computed ratio.
pub fn coulomb_normalization(xi: f64) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(Error::InvalidInput(format!("Sommerfeld parameter must be positive, got {xi}")));
    }
    let x = 2.0 * PI * xi;
    Ok(x / x.exp_m1())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn momentum_squared_is_twice_omega() {
        let k = Kinematics::from_hartree(37.0, 2.0, 3).unwrap();
        assert_eq!(k.p * k.p, 2.0 * 37.0);
        assert_relative_eq!(k.xi * k.xi, 1.0 / 74.0, max_relative = 1e-15);
        assert!(k.p_n < k.p);
        let k1 = Kinematics::from_hartree(37.0, 2.0, 1).unwrap();
        assert_eq!(k1.p_n, k1.p);
    }

    #[test]
    fn closed_channel_names_threshold() {
        // δ₂ + Z²/2 = 1.5 + 2 = 3.5 hartree for Z = 2
        match Kinematics::from_hartree(3.0, 2.0, 2) {
            Err(Error::ClosedChannel {
                threshold_hartree, ..
            }) => assert_relative_eq!(threshold_hartree, 3.5),
            other => panic!("expected closed channel, got {other:?}"),
        }
    }

    #[test]
    fn h_function_values() {
        let f = stobbe_normalization(1.0 / PI).unwrap();
        assert!((f.h - 0.6481).abs() < 1e-4);
        let small = stobbe_normalization(1e-8).unwrap();
        assert_relative_eq!(small.n_sq / 1e-8, PI, max_relative = 1e-7);
        let mut prev = f64::INFINITY;
        for xi in [0.1, 0.5, 1.0, 2.0] {
            let e = (-PI * xi).exp();
            assert!(e < prev);
            prev = e;
        }
    }

    #[test]
    fn coulomb_form_tends_to_one() {
        assert_relative_eq!(coulomb_normalization(1e-9).unwrap(), 1.0, max_relative = 1e-8);
        assert!(coulomb_normalization(0.0).is_err());
    }
}
