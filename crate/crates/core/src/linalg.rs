//! Dense symmetric linear algebra for the variational eigenproblem.
//!
//! Matrices here are at most a few hundred rows, so everything is plain
//! row-major `Vec<f64>` with O(n³) kernels.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Row-major constructor; panics if `rows` is not square.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self[(i, j)] * x[j]).sum())
            .collect()
    }

    /// xᵀ A y
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        x.iter().zip(self.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)] * self[(i, j)];
                }
            }
        }
        s.sqrt()
    }

    fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl std::ops::Index<(usize, usize)> for SquareMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Lower-triangular Cholesky factor L with S = L Lᵀ.
pub fn cholesky(s: &SquareMatrix) -> Result<SquareMatrix> {
    let n = s.dim();
    let mut l = SquareMatrix::zeros(n);
    for j in 0..n {
        let mut d = s[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > 0.0) {
            return Err(Error::DegenerateBasis { pivot: j, value: d });
        }
        let djj = d.sqrt();
        l[(j, j)] = djj;
        for i in j + 1..n {
            let mut v = s[(i, j)];
            for k in 0..j {
                v -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = v / djj;
        }
    }
    Ok(l)
}

/// All eigenpairs of a symmetric matrix by cyclic Jacobi rotations.
///
/// Returns eigenvalues in ascending order and the matching eigenvectors as
/// columns of the returned matrix. Iterates until the off-diagonal norm drops
/// below `tol` times the Frobenius norm.
pub fn jacobi_eigen(a: &SquareMatrix, tol: f64) -> Result<(Vec<f64>, SquareMatrix)> {
    const MAX_SWEEPS: usize = 100;
    let n = a.dim();
    let mut a = a.clone();
    let mut v = SquareMatrix::identity(n);
    let scale = a.frobenius_norm();
    let target = tol * scale.max(f64::MIN_POSITIVE);

    let mut sweeps = 0;
    while a.off_diagonal_norm() > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::EigenNoConvergence {
                sweeps,
                off_norm: a.off_diagonal_norm(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vectors = SquareMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[(k, col)] = v[(k, src)];
        }
    }
    Ok((values, vectors))
}

/// Lowest eigenpair of H c = E S c.
///
/// S is diagonally rescaled to unit diagonal, Cholesky-factorized, and the
/// reduced standard problem L⁻¹ H L⁻ᵀ is diagonalized by Jacobi rotations.
/// The returned vector satisfies cᵀ S c = 1; its sign is unspecified.
pub fn lowest_generalized_eigenpair(h: &SquareMatrix, s: &SquareMatrix) -> Result<(f64, Vec<f64>)> {
    let n = s.dim();
    if h.dim() != n {
        return Err(Error::InvalidInput("H and S dimensions differ".into()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("empty eigenproblem".into()));
    }
    let mut d = vec![0.0; n];
    for i in 0..n {
        if !(s[(i, i)] > 0.0) {
            return Err(Error::DegenerateBasis {
                pivot: i,
                value: s[(i, i)],
            });
        }
        d[i] = 1.0 / s[(i, i)].sqrt();
    }
    let mut hs = SquareMatrix::zeros(n);
    let mut ss = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            hs[(i, j)] = h[(i, j)] * d[i] * d[j];
            ss[(i, j)] = s[(i, j)] * d[i] * d[j];
        }
    }
    let l = cholesky(&ss)?;

    // Y = L⁻¹ H, then A = L⁻¹ Yᵀ = L⁻¹ H L⁻ᵀ.
    let forward = |m: &SquareMatrix| -> SquareMatrix {
        let mut out = SquareMatrix::zeros(n);
        for col in 0..n {
            for i in 0..n {
                let mut v = m[(i, col)];
                for k in 0..i {
                    v -= l[(i, k)] * out[(k, col)];
                }
                out[(i, col)] = v / l[(i, i)];
            }
        }
        out
    };
    let y = forward(&hs);
    let mut yt = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            yt[(i, j)] = y[(j, i)];
        }
    }
    let mut a = forward(&yt);
    for i in 0..n {
        for j in i + 1..n {
            let m = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = m;
            a[(j, i)] = m;
        }
    }

    let (values, vectors) = jacobi_eigen(&a, 1e-12)?;
    // back-substitute Lᵀ x = y, then undo the diagonal scaling
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut v = vectors[(i, 0)];
        for k in i + 1..n {
            v -= l[(k, i)] * x[k];
        }
        x[i] = v / l[(i, i)];
    }
    let mut c: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| xi * di).collect();
    let norm = s.bilinear(&c, &c).sqrt();
    for ci in &mut c {
        *ci /= norm;
    }
    Ok((values[0], c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn identity_overlap_diagonal_hamiltonian() {
        let h = SquareMatrix::from_diagonal(&[3.0, -1.5, 2.0, 0.25]);
        let s = SquareMatrix::identity(4);
        let (e, c) = lowest_generalized_eigenpair(&h, &s).unwrap();
        assert_eq!(e, -1.5);
        assert_relative_eq!(c[1].abs(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn cholesky_reconstructs() {
        let s = SquareMatrix::from_rows(&[
            vec![4.0, 2.0, 0.4],
            vec![2.0, 3.0, 0.5],
            vec![0.4, 0.5, 1.0],
        ]);
        let l = cholesky(&s).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v: f64 = (0..3).map(|k| l[(i, k)] * l[(j, k)]).sum();
                assert_relative_eq!(v, s[(i, j)], max_relative = 1e-14);
            }
        }
    }

    #[test]
    fn indefinite_overlap_is_degenerate() {
        let s = SquareMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        let h = SquareMatrix::identity(2);
        let err = lowest_generalized_eigenpair(&h, &s).unwrap_err();
        assert!(matches!(err, Error::DegenerateBasis { pivot: 1, .. }));
    }

    #[test]
    fn generalized_two_by_two() {
        // det(H − E S) = 0 with H = [[1,1],[1,2]], S = [[2,1],[1,2]]
        let h = SquareMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 2.0]]);
        let s = SquareMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        // 3E² − 4E + 1 = 0 → E ∈ {1/3, 1}
        let (e, c) = lowest_generalized_eigenpair(&h, &s).unwrap();
        assert_relative_eq!(e, 1.0 / 3.0, max_relative = 1e-13);
        let hc = h.mul_vec(&c);
        let sc = s.mul_vec(&c);
        for i in 0..2 {
            assert_relative_eq!(hc[i], e * sc[i], epsilon = 1e-13);
        }
        assert_relative_eq!(s.bilinear(&c, &c), 1.0, max_relative = 1e-13);
    }

    #[test]
    fn jacobi_spectrum_sorted() {
        let a = SquareMatrix::from_rows(&[
            vec![2.0, -1.0, 0.0],
            vec![-1.0, 2.0, -1.0],
            vec![0.0, -1.0, 2.0],
        ]);
        let (vals, _) = jacobi_eigen(&a, 1e-14).unwrap();
        let r2 = 2f64.sqrt();
        assert_relative_eq!(vals[0], 2.0 - r2, max_relative = 1e-13);
        assert_relative_eq!(vals[1], 2.0, max_relative = 1e-13);
        assert_relative_eq!(vals[2], 2.0 + r2, max_relative = 1e-13);
    }
}
