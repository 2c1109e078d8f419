use std::str::FromStr;

use super::coefficients::{su_from_limit, RatioCoefficients};
use super::kinematics::Kinematics;
use crate::error::{Error, Result};
use crate::units::{ev_to_hartree, hartree_to_ev};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OmegaScale {
    Linear,
    #[default]
    Log,
}

impl FromStr for OmegaScale {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(OmegaScale::Linear),
            "log" => Ok(OmegaScale::Log),
            other => Err(Error::InvalidInput(format!(
                "omega scale must be 'linear' or 'log', got {other:?}"
            ))),
        }
    }
}

/// Photon energies in eV, inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaGrid {
    pub min_ev: f64,
    pub max_ev: f64,
    pub points: usize,
    pub scale: OmegaScale,
}

impl OmegaGrid {
    pub fn values(&self) -> Result<Vec<f64>> {
        if !(self.min_ev > 0.0 && self.max_ev >= self.min_ev) || self.points == 0 {
            return Err(Error::InvalidInput(format!(
                "omega grid needs 0 < min <= max and at least one point, got [{}, {}] x {}",
                self.min_ev, self.max_ev, self.points
            )));
        }
        if self.points == 1 {
            return Ok(vec![self.min_ev]);
        }
        let last = (self.points - 1) as f64;
        Ok((0..self.points)
            .map(|i| {
                let t = i as f64 / last;
                match self.scale {
                    OmegaScale::Linear => self.min_ev + t * (self.max_ev - self.min_ev),
                    OmegaScale::Log => self.min_ev * (self.max_ev / self.min_ev).powf(t),
                }
            })
            .collect())
    }
}

/// Lowest photon energy (eV) of the intermediate-energy domain, ω ≥ 2Z² hartree.
pub fn validity_guard_ev(z: f64) -> f64 {
    hartree_to_ev(2.0 * z * z)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSample {
    pub omega_ev: f64,
    /// Rₙ = Σ_ℓ R_{nℓ}
    pub r_n: f64,
    /// R_{nℓ} for ℓ = 0, 1, …
    pub r_l: Vec<f64>,
    /// X_{nℓ} = R_{nℓ}/Rₙ
    pub x_l: Vec<f64>,
    /// Shake-up-only s ratio with the exact Coulomb exponent.
    pub r_su_exact: f64,
    /// Below the validity guard; emitted only on explicit request.
    pub out_of_domain: bool,
}

/// Energy-dependent ratios for one (Z, n) with every ℓ sampled on the same grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioCurve {
    pub z: f64,
    pub n: u32,
    pub samples: Vec<CurveSample>,
}

impl RatioCurve {
    pub fn l_count(&self) -> usize {
        self.samples.first().map_or(0, |s| s.r_l.len())
    }
}

/// R_{ns} = Aₙ + (dₙ + μfₙ)/(2ω), R_{nℓ} = B_{nℓ}/(2ω) for ℓ ≥ 1, with ω in
/// hartree and μ = πZ/√(2ω).
///
/// Every ω must open every stored channel. Energies under
/// [`validity_guard_ev`] are an error unless `allow_low_omega` is set, in
/// which case the rows are kept and tagged.
pub fn ratio_curves(
    coeffs: &RatioCoefficients,
    omegas_ev: &[f64],
    allow_low_omega: bool,
) -> Result<Vec<RatioCurve>> {
    let z = coeffs.z;
    let guard = validity_guard_ev(z);
    let n_top = coeffs.channels.iter().map(|c| c.n).max().unwrap_or(1);
    for &w in omegas_ev {
        Kinematics::new(w, z, n_top)?;
        if w < guard && !allow_low_omega {
            return Err(Error::OutOfDomain {
                omega_ev: w,
                guard_ev: guard,
                z,
            });
        }
    }

    let mut curves = Vec::new();
    for ch in &coeffs.channels {
        let mut samples = Vec::with_capacity(omegas_ev.len());
        for &w in omegas_ev {
            let kin = Kinematics::new(w, z, ch.n)?;
            let two_omega = 2.0 * ev_to_hartree(w);
            let mut r_l = vec![ch.a + ch.b0().eval(kin.mu) / two_omega];
            r_l.extend(ch.b_l.iter().map(|b| b / two_omega));
            let r_n: f64 = r_l.iter().sum();
            let x_l = r_l.iter().map(|r| r / r_n).collect();
            samples.push(CurveSample {
                omega_ev: w,
                r_n,
                r_l,
                x_l,
                r_su_exact: su_from_limit(ch.a, &kin),
                out_of_domain: w < guard,
            });
        }
        curves.push(RatioCurve {
            z,
            n: ch.n,
            samples,
        });
    }
    Ok(curves)
}

#[cfg(test)]
mod tests {
    use super::super::coefficients::{ChannelCoefficients, Kappa};
    use super::*;

    fn toy() -> RatioCoefficients {
        RatioCoefficients {
            z: 2.0,
            kappa: Kappa::C1,
            channels: vec![
                ChannelCoefficients {
                    n: 2,
                    a: 0.05,
                    d: 0.3,
                    f: -0.075,
                    b_l: vec![0.26],
                },
                ChannelCoefficients {
                    n: 3,
                    a: 0.006,
                    d: 0.05,
                    f: -0.008,
                    b_l: vec![0.03, 0.006],
                },
            ],
        }
    }

    #[test]
    fn grids() {
        let g = OmegaGrid {
            min_ev: 100.0,
            max_ev: 10_000.0,
            points: 3,
            scale: OmegaScale::Log,
        };
        let v = g.values().unwrap();
        assert!((v[1] - 1000.0).abs() < 1e-9);
        let lin = OmegaGrid {
            scale: OmegaScale::Linear,
            ..g
        };
        assert_eq!(lin.values().unwrap()[1], 5050.0);
        assert!(OmegaGrid { points: 0, ..g }.values().is_err());
        assert_eq!("lin".parse::<OmegaScale>().unwrap(), OmegaScale::Linear);
    }

    #[test]
    fn fractions_sum_to_one() {
        let curves = ratio_curves(&toy(), &[300.0, 1000.0, 5000.0], false).unwrap();
        for c in &curves {
            for s in &c.samples {
                let sum: f64 = s.x_l.iter().sum();
                assert!((sum - 1.0).abs() < 1e-14);
                assert!(!s.out_of_domain);
            }
        }
        assert_eq!(curves[1].l_count(), 3);
    }

    #[test]
    fn guard_and_threshold() {
        // 2Z² hartree = 8 hartree ≈ 217.7 eV for Z = 2
        assert!(matches!(
            ratio_curves(&toy(), &[150.0], false),
            Err(Error::OutOfDomain { .. })
        ));
        let low = ratio_curves(&toy(), &[150.0], true).unwrap();
        assert!(low[0].samples[0].out_of_domain);
        assert!(matches!(
            ratio_curves(&toy(), &[80.0], true),
            Err(Error::ClosedChannel { .. })
        ));
    }

    #[test]
    fn high_energy_limit() {
        let curves = ratio_curves(&toy(), &[1e9], false).unwrap();
        let s = &curves[0].samples[0];
        assert!((s.r_n - 0.05).abs() < 1e-8);
        assert!((s.x_l[0] - 1.0).abs() < 1e-6);
        assert!((s.r_su_exact - 0.05).abs() < 1e-6);
    }
}
