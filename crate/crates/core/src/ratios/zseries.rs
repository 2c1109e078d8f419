use crate::error::{Error, Result};

/// Third-order coefficients cₙ of the Aₙ Z² expansion in 1/Z, n = 2..6,
/// kept for side-by-side comparison with fitted aₙ, bₙ. Not computed here.
pub const REFERENCE_C: [(u32, f64); 5] = [
    (2, 9.2e-2),
    (3, 1.7e-2),
    (4, 0.64e-2),
    (5, 0.30e-2),
    (6, 0.17e-2),
];

pub fn reference_c(n: u32) -> Option<f64> {
    REFERENCE_C.iter().find(|(m, _)| *m == n).map(|(_, c)| *c)
}

/// Least-squares model Aₙ Z² ≈ aₙ + bₙ/Z.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesFit {
    pub n: u32,
    pub a: f64,
    pub b: f64,
    /// Largest |Aₙ Z² − (a + b/Z)| over the fitted points.
    pub max_residual: f64,
    pub rms_residual: f64,
    pub c_reference: Option<f64>,
    pub z_grid: Vec<f64>,
}

impl SeriesFit {
    pub fn predict(&self, z: f64) -> f64 {
        self.a + self.b / z
    }
}

/// Fits aₙ + bₙ/Z to `points` = [(Z, Aₙ)], which must hold at least three
/// distinct charges.
pub fn fit_z_series(n: u32, points: &[(f64, f64)]) -> Result<SeriesFit> {
    if points.len() < 3 {
        return Err(Error::InvalidInput(format!(
            "Z-series fit needs at least 3 charges, got {}",
            points.len()
        )));
    }
    if points.iter().any(|(z, _)| !(*z > 0.0)) {
        return Err(Error::InvalidInput("charges must be positive".into()));
    }
    let m = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|(z, _)| 1.0 / z).collect();
    let ys: Vec<f64> = points.iter().map(|(z, a)| a * z * z).collect();
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 {
        return Err(Error::InvalidInput("Z-series fit needs distinct charges".into()));
    }
    let b = sxy / sxx;
    let a = my - b * mx;
    let res: Vec<f64> = xs.iter().zip(&ys).map(|(x, y)| y - (a + b * x)).collect();
    Ok(SeriesFit {
        n,
        a,
        b,
        max_residual: res.iter().fold(0.0f64, |acc, r| acc.max(r.abs())),
        rms_residual: (res.iter().map(|r| r * r).sum::<f64>() / m).sqrt(),
        c_reference: reference_c(n),
        z_grid: points.iter().map(|p| p.0).collect(),
    })
}
