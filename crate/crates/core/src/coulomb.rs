//! Hydrogenic bound states of the one-electron residual ion.

use crate::error::{Error, Result};

/// Radial part of a hydrogenic orbital ψ_{nℓ} for nuclear charge Z,
/// normalized as ∫ R² r² dr = 1 and positive as r → 0⁺.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoulombOrbital {
    n: u32,
    l: u32,
    z: f64,
    norm: f64,
}

impl CoulombOrbital {
    pub fn new(n: u32, l: u32, z: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("principal quantum number must be >= 1".into()));
        }
        if l >= n {
            return Err(Error::InvalidInput(format!("l = {l} must be below n = {n}")));
        }
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::InvalidInput(format!("nuclear charge must be positive, got {z}")));
        }
        let nf = n as f64;
        let k = 2.0 * z / nf;
        let ratio = ln_factorial(n - l - 1) - ln_factorial(n + l);
        let norm = (k.powi(3) * ratio.exp() / (2.0 * nf)).sqrt();
        Ok(Self { n, l, z, norm })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// R_{nℓ}(r) in bohr^{-3/2}.
    pub fn radial_value(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0, "radial coordinate must be non-negative");
        let x = 2.0 * self.z * r / self.n as f64;
        let degree = self.n - self.l - 1;
        let alpha = (2 * self.l + 1) as f64;
        self.norm * x.powi(self.l as i32) * (-0.5 * x).exp() * laguerre(degree, alpha, x)
    }
}

/// Excitation energy δₙ = (Z²/2)(1 − 1/n²) of the residual ion, hartree.
pub fn excitation_energy(n: u32, z: f64) -> f64 {
    let nf = n as f64;
    0.5 * z * z * (1.0 - 1.0 / (nf * nf))
}

/// Generalized Laguerre polynomial L_k^{(α)}(x) by forward recurrence in k.
pub fn laguerre(k: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for m in 1..k {
        let mf = m as f64;
        let next = ((2.0 * mf + 1.0 + alpha - x) * cur - (mf + alpha) * prev) / (mf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}
