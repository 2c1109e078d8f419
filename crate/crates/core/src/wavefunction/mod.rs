//! Correlated two-electron ground states of Hylleraas type.

mod basis;
mod io;
mod profile;

pub use basis::{
    assemble_matrices, basic_integral, hylleraas_basis, overlap_matrix, HylleraasTerm,
    VOLUME_PREFACTOR,
};
pub use io::{from_text, load, save, to_text, FORMAT_VERSION};
pub use profile::{CoalescencePoint, CoalescenceProfile, ExpPolynomial};

use crate::error::{Error, Result};
use crate::linalg::{lowest_generalized_eigenpair, SquareMatrix};

/// Total degree of the default basis.
pub const DEFAULT_DEGREE: u32 = 6;

/// Relative slack on the stored norm when a wavefunction is rebuilt from parts.
const NORM_CONSISTENCY: f64 = 1e-8;

/// Ψ = e^{−αs} Σ c sⁱ tʲ uᵏ for a two-electron atom with nuclear charge Z.
///
/// Immutable once built. `norm` is ⟨Ψ|Ψ⟩ including the full volume element.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelatedWavefunction {
    z: f64,
    alpha: f64,
    terms: Vec<HylleraasTerm>,
    energy: f64,
    norm: f64,
}

impl CorrelatedWavefunction {
    /// Rebuilds a wavefunction from stored fields, checking every invariant.
    pub fn from_parts(
        z: f64,
        alpha: f64,
        terms: Vec<HylleraasTerm>,
        energy: f64,
        norm: f64,
    ) -> Result<Self> {
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::InvalidInput(format!("nuclear charge must be positive, got {z}")));
        }
        if !(energy < -0.5 * z * z) {
            return Err(Error::InvalidInput(format!(
                "energy {energy} is not below the one-electron threshold {}",
                -0.5 * z * z
            )));
        }
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::InvalidInput(format!("norm must be positive, got {norm}")));
        }
        let s = overlap_matrix(&terms, alpha)?;
        let c: Vec<f64> = terms.iter().map(|t| t.coefficient).collect();
        let actual = VOLUME_PREFACTOR * s.bilinear(&c, &c);
        if ((actual - norm) / norm).abs() > NORM_CONSISTENCY {
            return Err(Error::InvalidInput(format!(
                "stored norm {norm} disagrees with the coefficients ({actual})"
            )));
        }
        Ok(Self {
            z,
            alpha,
            terms,
            energy,
            norm,
        })
    }

    /// Lowest variational state in `basis` at fixed α, normalized to
    /// ⟨Ψ|Ψ⟩ = 1 and signed so that Ψ(0, r₂, r₂) > 0 as r₂ → 0⁺.
    pub fn solve(z: f64, alpha: f64, basis: &[HylleraasTerm]) -> Result<Self> {
        let (h, s) = assemble_matrices(basis, alpha, z)?;
        let (energy, c) = solve_ground(&h, &s)?;
        let scale = VOLUME_PREFACTOR.sqrt().recip();
        let terms: Vec<HylleraasTerm> = basis
            .iter()
            .zip(&c)
            .map(|(t, ci)| HylleraasTerm {
                coefficient: ci * scale,
                ..*t
            })
            .collect();
        let norm = VOLUME_PREFACTOR * s.bilinear(&c, &c) * scale * scale;
        let mut wf = Self::from_parts(z, alpha, terms, energy, norm)?;
        if coalescence_sign(&wf) < 0.0 {
            for t in &mut wf.terms {
                t.coefficient = -t.coefficient;
            }
        }
        Ok(wf)
    }

    /// Optimizes α over the default range for `basis`, then solves.
    pub fn solve_optimized(z: f64, basis: &[HylleraasTerm]) -> Result<(Self, AlphaOptimum)> {
        let opt = optimize_alpha(basis, z, default_alpha_range(z))?;
        Ok((Self::solve(z, opt.alpha, basis)?, opt))
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn terms(&self) -> &[HylleraasTerm] {
        &self.terms
    }

    /// Variational energy in hartree.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Every coefficient multiplied by `lambda`; the norm picks up λ².
    pub fn scaled(&self, lambda: f64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| HylleraasTerm {
                    coefficient: t.coefficient * lambda,
                    ..*t
                })
                .collect(),
            norm: self.norm * lambda * lambda,
            ..self.clone()
        }
    }

    /// Ψ(r₁, r₂, r₁₂); the three distances must form a triangle.
    pub fn evaluate(&self, r1: f64, r2: f64, r12: f64) -> Result<f64> {
        let slack = 1e-12 * (r1 + r2).max(1.0);
        if r1 < 0.0 || r2 < 0.0 || r12 < 0.0 {
            return Err(Error::InvalidInput("distances must be non-negative".into()));
        }
        if r12 < (r1 - r2).abs() - slack || r12 > r1 + r2 + slack {
            return Err(Error::InvalidInput(format!(
                "({r1}, {r2}, {r12}) violates the triangle inequality"
            )));
        }
        Ok(self.evaluate_unchecked(r1, r2, r12))
    }

    /// Ψ(r₁, r₂, r₁₂) without the triangle check, for finite-difference
    /// probes that step slightly outside the physical domain.
    pub fn evaluate_unchecked(&self, r1: f64, r2: f64, r12: f64) -> f64 {
        let s = r1 + r2;
        let t = r2 - r1;
        let t2 = t * t;
        let sum: f64 = self
            .terms
            .iter()
            .map(|term| {
                term.coefficient
                    * s.powi(term.i as i32)
                    * t2.powi((term.j / 2) as i32)
                    * r12.powi(term.k as i32)
            })
            .sum();
        sum * (-self.alpha * s).exp()
    }

    pub fn coalescence_profile(&self) -> CoalescenceProfile {
        CoalescenceProfile::new(self)
    }
}

/// Sign of Ψ(0, r₂, r₂) as r₂ → 0⁺, read off the lowest non-vanishing power.
fn coalescence_sign(wf: &CorrelatedWavefunction) -> f64 {
    let profile = CoalescenceProfile::new(wf);
    let coeffs = profile.psi0().coeffs();
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    coeffs
        .iter()
        .find(|c| c.abs() > 1e-12 * scale)
        .map_or(1.0, |c| c.signum())
}

/// Lowest eigenpair of H c = E S c with cᵀ S c = 1.
pub fn solve_ground(h: &SquareMatrix, s: &SquareMatrix) -> Result<(f64, Vec<f64>)> {
    lowest_generalized_eigenpair(h, s)
}

/// Ground-state variational energy of `terms` at exponent `alpha`.
pub fn ground_energy(terms: &[HylleraasTerm], z: f64, alpha: f64) -> Result<f64> {
    let (h, s) = assemble_matrices(terms, alpha, z)?;
    Ok(solve_ground(&h, &s)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaOptimum {
    pub alpha: f64,
    pub energy: f64,
    /// The minimum sits on an end of the search range, so the true optimum
    /// may lie outside it.
    pub at_boundary: bool,
}

/// Search range (Z/2, 2Z) used when no range is configured.
pub fn default_alpha_range(z: f64) -> (f64, f64) {
    (0.5 * z, 2.0 * z)
}

/// Golden-section minimization of the ground eigenvalue over α.
pub fn optimize_alpha(terms: &[HylleraasTerm], z: f64, range: (f64, f64)) -> Result<AlphaOptimum> {
    const TOL: f64 = 1e-4;
    let (lo, hi) = range;
    if !(lo > 0.0 && lo < hi && hi <= 4.0 * z) {
        return Err(Error::InvalidInput(format!(
            "alpha range ({lo}, {hi}) must lie within (0, 4Z] = (0, {}]",
            4.0 * z
        )));
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let energy = |a: f64| ground_energy(terms, z, a);

    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = energy(x1)?;
    let mut f2 = energy(x2)?;
    while b - a > TOL {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = energy(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = energy(x2)?;
        }
    }
    let alpha = 0.5 * (a + b);
    let at_boundary = alpha - lo < 2.0 * TOL || hi - alpha < 2.0 * TOL;
    Ok(AlphaOptimum {
        alpha,
        energy: energy(alpha)?,
        at_boundary,
    })
}
