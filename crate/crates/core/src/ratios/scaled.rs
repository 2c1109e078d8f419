use super::coefficients::RatioCoefficients;

/// Coefficients divided by Z²Aₙ, which removes the leading charge scaling.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledRatios {
    pub z: f64,
    pub n: u32,
    /// dₙ / Z²Aₙ
    pub r_d0: f64,
    /// fₙ / Z²Aₙ
    pub r_f0: f64,
    /// B_{nℓ} / Z²Aₙ for ℓ = 1, 2, …
    pub r_l: Vec<f64>,
    /// r_d0 + Σ_{ℓ>0} r_l
    pub r_d: f64,
    /// Equal to r_f0: only the s channel depends on μ.
    pub r_f: f64,
}

impl ScaledRatios {
    /// r = r_d + μ r_f
    pub fn r(&self, mu: f64) -> f64 {
        self.r_d + mu * self.r_f
    }
}

/// −(n² − 1)/(2n²), the value r_f0 takes for any charge.
pub fn closed_form_r_f(n: u32) -> f64 {
    let n2 = f64::from(n * n);
    -(n2 - 1.0) / (2.0 * n2)
}

/// Scaled ratios for every shell n ≥ 2 in `coeffs`.
pub fn scaled_ratios(coeffs: &RatioCoefficients) -> Vec<ScaledRatios> {
    let z2 = coeffs.z * coeffs.z;
    coeffs
        .channels
        .iter()
        .filter(|c| c.n >= 2 && c.a > 0.0)
        .map(|c| {
            let denom = z2 * c.a;
            let r_l: Vec<f64> = c.b_l.iter().map(|b| b / denom).collect();
            let r_d0 = c.d / denom;
            let r_f0 = c.f / denom;
            ScaledRatios {
                z: coeffs.z,
                n: c.n,
                r_d0,
                r_f0,
                r_d: r_d0 + r_l.iter().sum::<f64>(),
                r_f: r_f0,
                r_l,
            }
        })
        .collect()
}
