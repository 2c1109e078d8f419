use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::kinematics::Kinematics;
use crate::coulomb::excitation_energy;
use crate::elements::{angular_c, MatrixElementSet};
use crate::error::{Error, Result};

/// Weight of the shake-up overlap S_{n1} against P_n in the p-channel amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Kappa {
    /// κ = 1
    Literal,
    /// κ = c₁ = −√3/2
    #[default]
    C1,
}

impl Kappa {
    pub fn value(self) -> f64 {
        match self {
            Kappa::Literal => 1.0,
            Kappa::C1 => angular_c(1).expect("c_1 exists"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kappa::Literal => "literal",
            Kappa::C1 => "c1",
        }
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kappa {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(Kappa::Literal),
            "c1" => Ok(Kappa::C1),
            other => Err(Error::InvalidInput(format!(
                "kappa must be 'literal' or 'c1', got {other:?}"
            ))),
        }
    }
}

/// constant + mu_coeff · μ
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MuLinear {
    pub constant: f64,
    pub mu_coeff: f64,
}

impl MuLinear {
    pub fn new(constant: f64, mu_coeff: f64) -> Self {
        Self { constant, mu_coeff }
    }

    pub fn eval(&self, mu: f64) -> f64 {
        self.constant + self.mu_coeff * mu
    }
}

impl std::ops::Add for MuLinear {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.constant + o.constant, self.mu_coeff + o.mu_coeff)
    }
}

/// High-energy limit and 1/ω coefficients for one final shell n.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelCoefficients {
    pub n: u32,
    /// Aₙ = (Sₙ/S₁)²
    pub a: f64,
    /// μ-independent part of B_{n0}.
    pub d: f64,
    /// Coefficient of μ in B_{n0}.
    pub f: f64,
    /// B_{nℓ} for ℓ = 1, 2, … (index 0 holds ℓ = 1).
    pub b_l: Vec<f64>,
}

impl ChannelCoefficients {
    pub fn b0(&self) -> MuLinear {
        MuLinear::new(self.d, self.f)
    }

    /// B_{nℓ} for ℓ ≥ 1.
    pub fn b(&self, l: u32) -> Option<f64> {
        l.checked_sub(1).and_then(|i| self.b_l.get(i as usize)).copied()
    }

    /// Bₙ = Σ_ℓ B_{nℓ}, with the μ-dependence carried along.
    pub fn b_total(&self) -> MuLinear {
        MuLinear::new(self.d + self.b_l.iter().sum::<f64>(), self.f)
    }

    /// Highest ℓ present.
    pub fn l_top(&self) -> u32 {
        self.b_l.len() as u32
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioCoefficients {
    pub z: f64,
    pub kappa: Kappa,
    pub channels: Vec<ChannelCoefficients>,
}

impl RatioCoefficients {
    pub fn channel(&self, n: u32) -> Option<&ChannelCoefficients> {
        self.channels.iter().find(|c| c.n == n)
    }
}

fn require_s1(me: &MatrixElementSet) -> Result<f64> {
    let s1 = me.s(1, 0);
    if s1 == 0.0 || !s1.is_finite() {
        return Err(Error::InvalidInput("ground-shell overlap S_1 vanishes".into()));
    }
    Ok(s1)
}

/// Aₙ for n = 1..=n_max.
pub fn high_energy_limits(me: &MatrixElementSet) -> Result<Vec<f64>> {
    let s1 = require_s1(me)?;
    Ok((1..=me.n_max()).map(|n| (me.s(n, 0) / s1).powi(2)).collect())
}

/// The s-channel coefficient of 1/(2ω) split by mechanism.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct B0Decomposition {
    pub n: u32,
    /// Coefficient of (1 − μ): Aₙ δₙ.
    pub kinematical: f64,
    pub isi: f64,
    pub fsi: f64,
}

impl B0Decomposition {
    pub fn total(&self) -> MuLinear {
        MuLinear::new(self.kinematical + self.isi + self.fsi, -self.kinematical)
    }
}

pub fn decompose_b0(me: &MatrixElementSet) -> Result<Vec<B0Decomposition>> {
    let s1 = require_s1(me)?;
    let z = me.z();
    let s1_sq = s1 * s1;
    Ok((1..=me.n_max())
        .map(|n| {
            let sn = me.s(n, 0);
            let ratio = sn / s1;
            let a = ratio * ratio;
            let isi = 2.0 * sn * (me.q(n) - ratio * me.q(1)) / s1_sq;
            let vw = |k| me.v(k) + me.w(k);
            let fsi = 2.0 * sn * (vw(n) - ratio * vw(1)) / s1_sq
                + (me.u(n).powi(2) - a * me.u(1).powi(2)) / s1_sq;
            B0Decomposition {
                n,
                kinematical: a * excitation_energy(n, z),
                isi,
                fsi,
            }
        })
        .collect())
}

/// Aₙ, B_{n0} = dₙ + μfₙ and B_{nℓ} (ℓ ≥ 1) for every stored shell.
///
/// B_{n1} = (Pₙ + κ S_{n1})²/S₁² and B_{nℓ} = c_ℓ² S_{nℓ}²/S₁² for ℓ ≥ 2.
pub fn b_coefficients(me: &MatrixElementSet, kappa: Kappa) -> Result<RatioCoefficients> {
    let s1 = require_s1(me)?;
    let s1_sq = s1 * s1;
    let mut channels = Vec::new();
    for part in decompose_b0(me)? {
        let n = part.n;
        let b0 = part.total();
        let mut b_l = Vec::new();
        for l in 1..=me.l_top(n) {
            let b = if l == 1 {
                (me.p(n) + kappa.value() * me.s(n, 1)).powi(2) / s1_sq
            } else {
                (angular_c(l)? * me.s(n, l)).powi(2) / s1_sq
            };
            b_l.push(b);
        }
        channels.push(ChannelCoefficients {
            n,
            a: (me.s(n, 0) / s1).powi(2),
            d: b0.constant,
            f: b0.mu_coeff,
            b_l,
        });
    }
    Ok(RatioCoefficients {
        z: me.z(),
        kappa,
        channels,
    })
}

/// Shake-up ratio with the exact Coulomb exponent:
/// Aₙ (p/pₙ) exp(−π(Z/pₙ − Z/p)).
pub fn ratio_su_exact(me: &MatrixElementSet, kin: &Kinematics) -> Result<f64> {
    let s1 = require_s1(me)?;
    Ok(su_from_limit((me.s(kin.n, 0) / s1).powi(2), kin))
}

pub(crate) fn su_from_limit(a: f64, kin: &Kinematics) -> f64 {
    a * (kin.p / kin.p_n) * (-PI * (kin.xi_z_n - kin.xi_z)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_parsing() {
        assert_eq!("c1".parse::<Kappa>().unwrap(), Kappa::C1);
        assert_eq!("literal".parse::<Kappa>().unwrap(), Kappa::Literal);
        assert!("one".parse::<Kappa>().is_err());
        assert_eq!(Kappa::default(), Kappa::C1);
        assert!((Kappa::C1.value() + 3f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn mu_linear_arithmetic() {
        let a = MuLinear::new(0.2, -0.07);
        let b = MuLinear::new(0.1, 0.0);
        assert!(((a + b).eval(1.0) - 0.23).abs() < 1e-15);
    }

    #[test]
    fn decomposition_total_regroups() {
        let part = B0Decomposition {
            n: 2,
            kinematical: 0.07,
            isi: 0.03,
            fsi: 0.09,
        };
        let t = part.total();
        for mu in [0.0, 0.5, 1.3] {
            let direct = part.kinematical * (1.0 - mu) + part.isi + part.fsi;
            assert!((t.eval(mu) - direct).abs() < 1e-15);
        }
    }

    #[test]
    fn su_ratio_of_ground_shell_is_one() {
        let kin = Kinematics::from_hartree(20.0, 2.0, 1).unwrap();
        assert_eq!(su_from_limit(1.0, &kin), 1.0);
    }
}
