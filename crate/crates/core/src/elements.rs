//! Radial matrix elements between the ground-state coalescence profile and
//! hydrogenic orbitals of the residual ion.
//!
//! Every element carries the factor (4π)^{1/2} from the s-wave projection of
//! Ψ(0, r₂). Lengths are in bohr, so the r₀ that balances dimensions in the
//! ISI and FSI elements is 1.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::coulomb::CoulombOrbital;
use crate::error::{Error, Result};
use crate::quadrature::{legendre, RadialQuadrature};
use crate::wavefunction::CoalescenceProfile;

/// Infrared regulator used when none is configured.
pub const DEFAULT_NU: f64 = 1.0;

fn sqrt_4pi() -> f64 {
    (4.0 * PI).sqrt()
}

/// ∫₀^∞ r² R_{nℓ}(r) g(r) dr.
pub fn radial_integral<G: Fn(f64) -> f64>(
    g: G,
    orb: &CoulombOrbital,
    quad: &RadialQuadrature,
) -> Result<f64> {
    Ok(quad.integrate(|r| r * r * orb.radial_value(r) * g(r))?.value)
}

/// Shake-up overlap S_{nℓ} = (4π)^{1/2} ∫ r² R_{nℓ} Ψ(0, r, r) dr.
pub fn shake_overlap(
    profile: &CoalescenceProfile,
    orb: &CoulombOrbital,
    quad: &RadialQuadrature,
) -> Result<f64> {
    let psi0 = profile.psi0();
    Ok(sqrt_4pi() * radial_integral(|r| psi0.eval(r), orb, quad)?)
}

fn require_l(orb: &CoulombOrbital, l: u32, what: &str) -> Result<()> {
    if orb.l() != l {
        return Err(Error::InvalidInput(format!(
            "{what} needs an l = {l} orbital, got l = {}",
            orb.l()
        )));
    }
    Ok(())
}

/// Q_n = −(4π)^{1/2} ∫ r² R_{n0} [Ψ''_rr + Ψ''_ρρ/3 + 2Ψ'_ρ/(3r)] dr.
pub fn isi_s(
    profile: &CoalescenceProfile,
    orb: &CoulombOrbital,
    quad: &RadialQuadrature,
) -> Result<f64> {
    require_l(orb, 0, "Q_n")?;
    let (rr, hh, h) = (profile.d_rr(), profile.d_rhorho(), profile.d_rho());
    // the 1/r of the last term is absorbed into the r² weight
    let value = quad.integrate(|r| {
        orb.radial_value(r) * (r * r * (rr.eval(r) + hh.eval(r) / 3.0) + 2.0 * r * h.eval(r) / 3.0)
    })?;
    Ok(-sqrt_4pi() * value.value)
}

/// P_n = (4π)^{1/2} (2√3/3) ∫ r² R_{n1} Ψ'_ρ dr.
pub fn isi_p(
    profile: &CoalescenceProfile,
    orb: &CoulombOrbital,
    quad: &RadialQuadrature,
) -> Result<f64> {
    require_l(orb, 1, "P_n")?;
    let h = profile.d_rho();
    let factor = 2.0 * 3f64.sqrt() / 3.0;
    Ok(sqrt_4pi() * factor * radial_integral(|r| h.eval(r), orb, quad)?)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FsiElements {
    pub u: f64,
    pub v: f64,
    pub w: f64,
}

/// U_n, V_n, W_n for an s orbital with regulator ν:
/// U = (4π)^{1/2} ∫ r² R ln(rν) Ψ₀, V = ((4π)^{1/2}/2) ∫ r² R dΨ₀/dr,
/// W = −((4π)^{1/2}/2) ∫ r² R ln²(rν) Ψ₀.
pub fn fsi_elements(
    profile: &CoalescenceProfile,
    orb: &CoulombOrbital,
    nu: f64,
    quad: &RadialQuadrature,
) -> Result<FsiElements> {
    require_l(orb, 0, "U_n, V_n, W_n")?;
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::InvalidInput(format!("regulator nu must be positive, got {nu}")));
    }
    let psi0 = profile.psi0();
    let total = profile.d_total();
    let u = radial_integral(|r| (r * nu).ln() * psi0.eval(r), orb, quad)?;
    let v = radial_integral(|r| total.eval(r), orb, quad)?;
    let w = radial_integral(|r| (r * nu).ln().powi(2) * psi0.eval(r), orb, quad)?;
    Ok(FsiElements {
        u: sqrt_4pi() * u,
        v: 0.5 * sqrt_4pi() * v,
        w: -0.5 * sqrt_4pi() * w,
    })
}

/// c_ℓ = −√(2ℓ+1) / (ℓ(ℓ+1)), the Pₗ projection of ln(1 − cos θ).
pub fn angular_c(l: u32) -> Result<f64> {
    if l == 0 {
        return Err(Error::InvalidInput(
            "c_l is defined for l >= 1; the l = 0 projection diverges with the regulator".into(),
        ));
    }
    let lf = f64::from(l);
    Ok(-(2.0 * lf + 1.0).sqrt() / (lf * (lf + 1.0)))
}

/// (√(2ℓ+1)/2) ∫₋₁¹ ln(1 − t) Pₗ(t) dt by quadrature.
///
/// With 1 − t = 2e^{−y} the logarithmic endpoint moves to y → ∞ and the
/// integrand becomes (ln 2 − y) Pₗ(1 − 2e^{−y}) 2e^{−y}.
pub fn angular_c_quadrature(l: u32) -> Result<f64> {
    if l == 0 {
        return angular_c(0);
    }
    let quad = RadialQuadrature::default().with_rel_tol(1e-14);
    let res = quad.integrate(|y| {
        let e = (-y).exp();
        (2f64.ln() - y) * legendre(l as usize, 1.0 - 2.0 * e) * 2.0 * e
    })?;
    Ok(0.5 * (2.0 * f64::from(l) + 1.0).sqrt() * res.value)
}

/// All matrix elements of one wavefunction through principal quantum number
/// `n_max`, with orbital momenta ℓ ≤ min(n − 1, `l_max`).
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixElementSet {
    z: f64,
    n_max: u32,
    l_max: u32,
    nu: f64,
    s: Vec<Vec<f64>>,
    q: Vec<f64>,
    p: Vec<f64>,
    u: Vec<f64>,
    v: Vec<f64>,
    w: Vec<f64>,
}

impl MatrixElementSet {
    /// Bohr radius in atomic units.
    pub const R0: f64 = 1.0;

    pub fn compute(
        profile: &CoalescenceProfile,
        n_max: u32,
        l_max: u32,
        nu: f64,
        quad: &RadialQuadrature,
    ) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidInput("n_max must be at least 1".into()));
        }
        let z = profile.z();
        let mut out = Self {
            z,
            n_max,
            l_max,
            nu,
            s: Vec::new(),
            q: Vec::new(),
            p: Vec::new(),
            u: Vec::new(),
            v: Vec::new(),
            w: Vec::new(),
        };
        for n in 1..=n_max {
            let mut row = Vec::new();
            for l in 0..=l_max.min(n - 1) {
                let orb = CoulombOrbital::new(n, l, z)?;
                row.push(shake_overlap(profile, &orb, quad)?);
            }
            out.s.push(row);
            let s_orb = CoulombOrbital::new(n, 0, z)?;
            out.q.push(isi_s(profile, &s_orb, quad)?);
            let fsi = fsi_elements(profile, &s_orb, nu, quad)?;
            out.u.push(fsi.u);
            out.v.push(fsi.v);
            out.w.push(fsi.w);
            out.p.push(if n >= 2 && l_max >= 1 {
                isi_p(profile, &CoulombOrbital::new(n, 1, z)?, quad)?
            } else {
                0.0
            });
        }
        Ok(out)
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Highest ℓ stored for shell `n`.
    pub fn l_top(&self, n: u32) -> u32 {
        self.l_max.min(n - 1)
    }

    fn idx(&self, n: u32) -> usize {
        assert!(n >= 1 && n <= self.n_max, "n = {n} outside 1..={}", self.n_max);
        (n - 1) as usize
    }

    pub fn s(&self, n: u32, l: u32) -> f64 {
        let row = &self.s[self.idx(n)];
        assert!((l as usize) < row.len(), "l = {l} not stored for n = {n}");
        row[l as usize]
    }

    pub fn q(&self, n: u32) -> f64 {
        self.q[self.idx(n)]
    }

    /// P_n; zero for n = 1, which has no p orbital.
    pub fn p(&self, n: u32) -> f64 {
        self.p[self.idx(n)]
    }

    pub fn u(&self, n: u32) -> f64 {
        self.u[self.idx(n)]
    }

    pub fn v(&self, n: u32) -> f64 {
        self.v[self.idx(n)]
    }

    pub fn w(&self, n: u32) -> f64 {
        self.w[self.idx(n)]
    }

    /// Flat table with one row per (n, ℓ). Q, U, V, W belong to ℓ = 0 rows
    /// and P to ℓ = 1 rows; other cells are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("Z,n,l,S,Q,P,U,V,W,nu\n");
        let cell = |on: bool, v: f64| if on { format!("{v:.16e}") } else { String::new() };
        for n in 1..=self.n_max {
            for l in 0..=self.l_top(n) {
                let s_row = l == 0;
                let _ = writeln!(
                    out,
                    "{},{n},{l},{:.16e},{},{},{},{},{},{}",
                    self.z,
                    self.s(n, l),
                    cell(s_row, self.q(n)),
                    cell(l == 1, self.p(n)),
                    cell(s_row, self.u(n)),
                    cell(s_row, self.v(n)),
                    cell(s_row, self.w(n)),
                    self.nu,
                );
            }
        }
        out
    }
}
