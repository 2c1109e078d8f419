//! The wavefunction and its partial derivatives at the electron–nucleus
//! coalescence point r₁ = 0, ρ = r₁₂ = r₂, as exact functions of r₂.

use super::CorrelatedWavefunction;

/// e^{−αr} Σₚ cₚ rᵖ
#[derive(Debug, Clone, PartialEq)]
pub struct ExpPolynomial {
    alpha: f64,
    coeffs: Vec<f64>,
}

impl ExpPolynomial {
    pub fn new(alpha: f64, coeffs: Vec<f64>) -> Self {
        Self { alpha, coeffs }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, r: f64) -> f64 {
        let poly = self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c);
        poly * (-self.alpha * r).exp()
    }

    /// d/dr of the whole expression, again an [`ExpPolynomial`].
    pub fn derivative(&self) -> Self {
        let mut out = vec![0.0; self.coeffs.len().max(1)];
        for (p, c) in self.coeffs.iter().enumerate() {
            out[p] -= self.alpha * c;
            if p > 0 {
                out[p - 1] += p as f64 * c;
            }
        }
        Self::new(self.alpha, out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0.0)
    }
}

/// Values of Ψ(r, r₂, ρ) and its derivatives at r = 0, ρ = r₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoalescencePoint {
    pub psi: f64,
    pub d_r: f64,
    pub d_rho: f64,
    pub d_rr: f64,
    pub d_rhorho: f64,
    pub d_rrho: f64,
}

/// Ψ(0, r₂, r₂) and its first and second partial derivatives with respect
/// to r = r₁ and ρ = r₁₂, obtained term by term from the Hylleraas form via
/// ∂/∂r = ∂s − ∂t and ∂/∂ρ = ∂u at s = t = u = r₂.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalescenceProfile {
    z: f64,
    psi0: ExpPolynomial,
    d_r: ExpPolynomial,
    d_rho: ExpPolynomial,
    d_rr: ExpPolynomial,
    d_rhorho: ExpPolynomial,
    d_rrho: ExpPolynomial,
    d_total: ExpPolynomial,
}

impl CoalescenceProfile {
    pub fn new(wf: &CorrelatedWavefunction) -> Self {
        let part = |ns, nt, nu| mixed_derivative(wf, ns, nt, nu);
        let combine = |parts: &[(f64, ExpPolynomial)]| -> ExpPolynomial {
            let len = parts.iter().map(|p| p.1.coeffs.len()).max().unwrap_or(1);
            let mut out = vec![0.0; len];
            for (w, p) in parts {
                for (o, c) in out.iter_mut().zip(&p.coeffs) {
                    *o += w * c;
                }
            }
            ExpPolynomial::new(wf.alpha(), out)
        };

        let d_r = combine(&[(1.0, part(1, 0, 0)), (-1.0, part(0, 1, 0))]);
        let d_rr = combine(&[
            (1.0, part(2, 0, 0)),
            (-2.0, part(1, 1, 0)),
            (1.0, part(0, 2, 0)),
        ]);
        let d_rrho = combine(&[(1.0, part(1, 0, 1)), (-1.0, part(0, 1, 1))]);
        // r₂ enters both through s + t (at fixed r, ρ) and through ρ = r₂
        let d_total = combine(&[
            (1.0, part(1, 0, 0)),
            (1.0, part(0, 1, 0)),
            (1.0, part(0, 0, 1)),
        ]);
        Self {
            z: wf.z(),
            psi0: part(0, 0, 0),
            d_r,
            d_rho: part(0, 0, 1),
            d_rr,
            d_rhorho: part(0, 0, 2),
            d_rrho,
            d_total,
        }
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn at(&self, r2: f64) -> CoalescencePoint {
        CoalescencePoint {
            psi: self.psi0.eval(r2),
            d_r: self.d_r.eval(r2),
            d_rho: self.d_rho.eval(r2),
            d_rr: self.d_rr.eval(r2),
            d_rhorho: self.d_rhorho.eval(r2),
            d_rrho: self.d_rrho.eval(r2),
        }
    }

    /// Ψ(0, r₂, r₂)
    pub fn psi0(&self) -> &ExpPolynomial {
        &self.psi0
    }

    pub fn d_r(&self) -> &ExpPolynomial {
        &self.d_r
    }

    pub fn d_rho(&self) -> &ExpPolynomial {
        &self.d_rho
    }

    pub fn d_rr(&self) -> &ExpPolynomial {
        &self.d_rr
    }

    pub fn d_rhorho(&self) -> &ExpPolynomial {
        &self.d_rhorho
    }

    pub fn d_rrho(&self) -> &ExpPolynomial {
        &self.d_rrho
    }

    /// dΨ(0, r₂, r₂)/dr₂ along the coalescence line.
    pub fn d_total(&self) -> &ExpPolynomial {
        &self.d_total
    }

    /// Ψ'_r / Ψ₀ at `r2`; the Kato cusp of an exact eigenstate gives −Z.
    pub fn cusp_ratio(&self, r2: f64) -> f64 {
        self.d_r.eval(r2) / self.psi0.eval(r2)
    }

    /// Mean relative deviation of the cusp ratio from −Z over r₂ ∈ {1/4, 1/2, 1, 2}·(2/Z).
    pub fn cusp_deviation(&self) -> f64 {
        let samples = [0.25, 0.5, 1.0, 2.0];
        let total: f64 = samples
            .iter()
            .map(|x| {
                let r2 = x * 2.0 / self.z;
                ((self.cusp_ratio(r2) + self.z) / self.z).abs()
            })
            .sum();
        total / samples.len() as f64
    }
}

/// ∂ₛ^ns ∂ₜ^nt ∂ᵤ^nu Ψ at s = t = u = r₂.
fn mixed_derivative(wf: &CorrelatedWavefunction, ns: u32, nt: u32, nu: u32) -> ExpPolynomial {
    let alpha = wf.alpha();
    let max_degree = wf.terms().iter().map(|t| t.degree()).max().unwrap_or(0) as usize;
    let mut coeffs = vec![0.0; max_degree + 1];
    for term in wf.terms() {
        let (i, j, k) = term.powers();
        if nt > j || nu > k {
            continue;
        }
        let ft = falling(j, nt);
        let fu = falling(k, nu);
        for q in 0..=ns.min(i) {
            let fs = binomial(ns, q) * (-alpha).powi((ns - q) as i32) * falling(i, q);
            let p = (i - q + j - nt + k - nu) as usize;
            coeffs[p] += term.coefficient * fs * ft * fu;
        }
    }
    ExpPolynomial::new(alpha, coeffs)
}

/// n (n−1) … (n−m+1)
fn falling(n: u32, m: u32) -> f64 {
    (0..m).map(|x| f64::from(n - x)).product()
}

fn binomial(n: u32, k: u32) -> f64 {
    falling(n, k) / falling(k, k)
}
