//! Hylleraas basis functions e^{−αs} sⁱ tʲ uᵏ and their closed-form
//! overlap and Hamiltonian matrices.
//!
//! Coordinates: s = r₁ + r₂, t = r₂ − r₁, u = r₁₂. The volume element is
//! π²(s² − t²)u ds dt du on 0 ≤ |t| ≤ u ≤ s. Every integrand that appears is
//! even in t, so integrals run over 0 ≤ t ≤ u ≤ s and the common factor 2π²
//! is dropped from both H and S.

use crate::error::{Error, Result};
use crate::linalg::SquareMatrix;

/// Total power a+b+c+2 below which factorials are accumulated directly.
const DIRECT_FACTORIAL_LIMIT: u32 = 20;
/// 170! is the largest factorial representable in f64.
const MAX_FACTORIAL: u32 = 170;

/// Volume prefactor dropped from assembled matrices: ⟨φ|χ⟩ = 2π² Sᵩᵪ.
pub const VOLUME_PREFACTOR: f64 = 2.0 * std::f64::consts::PI * std::f64::consts::PI;

/// One term c · e^{−αs} sⁱ tʲ uᵏ of a singlet Hylleraas expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HylleraasTerm {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub coefficient: f64,
}

impl HylleraasTerm {
    /// Rejects odd powers of t, which would describe a triplet.
    pub fn new(i: u32, j: u32, k: u32, coefficient: f64) -> Result<Self> {
        if !j.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!(
                "power of t must be even for a singlet, got j = {j}"
            )));
        }
        Ok(Self { i, j, k, coefficient })
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j + self.k
    }

    pub fn powers(&self) -> (u32, u32, u32) {
        (self.i, self.j, self.k)
    }
}

/// All terms with even j and i + j + k ≤ `degree`, unit coefficients,
/// ordered by total degree and then lexicographically. Bases of increasing
/// degree are therefore nested prefixes of one another.
pub fn hylleraas_basis(degree: u32) -> Vec<HylleraasTerm> {
    let mut terms = Vec::new();
    for total in 0..=degree {
        for i in (0..=total).rev() {
            for j in (0..=total - i).step_by(2) {
                let k = total - i - j;
                terms.push(HylleraasTerm {
                    i,
                    j,
                    k,
                    coefficient: 1.0,
                });
            }
        }
    }
    terms
}

/// ∫₀^∞ e^{−βs} sᵃ ∫₀^s uᵇ ∫₀^u tᶜ dt du ds = (a+b+c+2)! / [(c+1)(b+c+2) β^{a+b+c+3}].
pub fn basic_integral(a: u32, b: u32, c: u32, beta: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::InvalidInput(format!("exponent must be positive, got {beta}")));
    }
    let total = a + b + c + 2;
    if total > MAX_FACTORIAL {
        return Err(Error::FactorialOverflow(total));
    }
    let denom = ((c + 1) * (b + c + 2)) as f64;
    let value = if total <= DIRECT_FACTORIAL_LIMIT {
        let fact: f64 = (2..=total).map(f64::from).product();
        fact / (denom * beta.powi(total as i32 + 1))
    } else {
        let ln_fact: f64 = (2..=total).map(|k| f64::from(k).ln()).sum();
        (ln_fact - (total as f64 + 1.0) * beta.ln()).exp() / denom
    };
    if !value.is_finite() {
        return Err(Error::FactorialOverflow(total));
    }
    Ok(value)
}

/// c · s^s u^u t^t, sharing the exponential of the surrounding integral.
#[derive(Debug, Clone, Copy)]
struct Monomial {
    c: f64,
    s: u32,
    u: u32,
    t: u32,
}

const fn mono(c: f64, s: u32, u: u32, t: u32) -> Monomial {
    Monomial { c, s, u, t }
}

/// Parts of one basis function: value and ∂s, ∂t, ∂u without the exponential.
struct Differentiated {
    value: Vec<Monomial>,
    ds: Vec<Monomial>,
    dt: Vec<Monomial>,
    du: Vec<Monomial>,
}

fn differentiate(term: &HylleraasTerm, alpha: f64) -> Differentiated {
    let (i, j, k) = term.powers();
    let mut ds = vec![mono(-alpha, i, k, j)];
    if i > 0 {
        ds.push(mono(i as f64, i - 1, k, j));
    }
    let dt = if j > 0 {
        vec![mono(j as f64, i, k, j - 1)]
    } else {
        Vec::new()
    };
    let du = if k > 0 {
        vec![mono(k as f64, i, k - 1, j)]
    } else {
        Vec::new()
    };
    Differentiated {
        value: vec![mono(1.0, i, k, j)],
        ds,
        dt,
        du,
    }
}

/// ∫ f · g · w over the Hylleraas domain with exponent β.
fn integrate_product(f: &[Monomial], g: &[Monomial], w: &[Monomial], beta: f64) -> Result<f64> {
    let mut sum = 0.0;
    for a in f {
        for b in g {
            for c in w {
                let t = a.t + b.t + c.t;
                debug_assert!(t % 2 == 0, "odd power of t in a singlet integrand");
                sum += a.c * b.c * c.c * basic_integral(a.s + b.s + c.s, a.u + b.u + c.u, t, beta)?;
            }
        }
    }
    Ok(sum)
}

// Weight polynomials of the volume element and kinetic functional.
const W_VOLUME: [Monomial; 2] = [mono(1.0, 2, 1, 0), mono(-1.0, 0, 1, 2)]; // u(s² − t²)
const W_SU: [Monomial; 2] = [mono(1.0, 1, 2, 0), mono(-1.0, 1, 0, 2)]; // s(u² − t²)
const W_TU: [Monomial; 2] = [mono(1.0, 2, 0, 1), mono(-1.0, 0, 2, 1)]; // t(s² − u²)

fn check_basis(terms: &[HylleraasTerm], alpha: f64) -> Result<()> {
    if terms.is_empty() {
        return Err(Error::InvalidInput("basis is empty".into()));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidInput(format!("alpha must be positive, got {alpha}")));
    }
    for (m, a) in terms.iter().enumerate() {
        if a.j % 2 != 0 {
            return Err(Error::InvalidInput(format!("term {m} has odd j = {}", a.j)));
        }
        if terms[..m].iter().any(|b| b.powers() == a.powers()) {
            return Err(Error::DegenerateBasis { pivot: m, value: 0.0 });
        }
    }
    Ok(())
}

/// Overlap matrix alone, with the 2π² prefactor dropped.
pub fn overlap_matrix(terms: &[HylleraasTerm], alpha: f64) -> Result<SquareMatrix> {
    check_basis(terms, alpha)?;
    let beta = 2.0 * alpha;
    let n = terms.len();
    let mut s = SquareMatrix::zeros(n);
    for m in 0..n {
        let fm = differentiate(&terms[m], alpha);
        for l in m..n {
            let fl = differentiate(&terms[l], alpha);
            let v = integrate_product(&fm.value, &fl.value, &W_VOLUME, beta)?;
            s[(m, l)] = v;
            s[(l, m)] = v;
        }
    }
    Ok(s)
}

/// Hamiltonian and overlap matrices (H, S) of the two-electron problem with
/// nuclear charge `z`, both with the 2π² volume prefactor dropped.
///
/// The potential −Z/r₁ − Z/r₂ + 1/r₁₂ times the volume weight becomes the
/// polynomial −4Zsu + (s² − t²); the kinetic term uses the symmetric
/// gradient form so only first derivatives appear.
pub fn assemble_matrices(
    terms: &[HylleraasTerm],
    alpha: f64,
    z: f64,
) -> Result<(SquareMatrix, SquareMatrix)> {
    check_basis(terms, alpha)?;
    if !(z > 0.0) {
        return Err(Error::InvalidInput(format!("nuclear charge must be positive, got {z}")));
    }
    let beta = 2.0 * alpha;
    let potential = [mono(-4.0 * z, 1, 1, 0), mono(1.0, 2, 0, 0), mono(-1.0, 0, 0, 2)];
    let parts: Vec<Differentiated> = terms.iter().map(|t| differentiate(t, alpha)).collect();

    let n = terms.len();
    let mut h = SquareMatrix::zeros(n);
    let mut s = SquareMatrix::zeros(n);
    for m in 0..n {
        let a = &parts[m];
        for l in m..n {
            let b = &parts[l];
            let overlap = integrate_product(&a.value, &b.value, &W_VOLUME, beta)?;
            let pot = integrate_product(&a.value, &b.value, &potential, beta)?;
            let kinetic = integrate_product(&a.ds, &b.ds, &W_VOLUME, beta)?
                + integrate_product(&a.dt, &b.dt, &W_VOLUME, beta)?
                + integrate_product(&a.du, &b.du, &W_VOLUME, beta)?
                + integrate_product(&a.ds, &b.du, &W_SU, beta)?
                + integrate_product(&a.du, &b.ds, &W_SU, beta)?
                + integrate_product(&a.dt, &b.du, &W_TU, beta)?
                + integrate_product(&a.du, &b.dt, &W_TU, beta)?;
            let hv = kinetic + pot;
            s[(m, l)] = overlap;
            s[(l, m)] = overlap;
            h[(m, l)] = hv;
            h[(l, m)] = hv;
        }
    }
    Ok((h, s))
}
