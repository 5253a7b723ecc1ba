//! Symmetric eigensolver used as the numeric oracle.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectrum::Spectrum;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric row-major `n x n` matrix, ascending.
///
/// Cyclic Jacobi: plane rotations sweep the off-diagonal entries until their
/// Frobenius norm falls below `1e-12` times the norm of the matrix.
pub fn jacobi_eigenvalues(data: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(data.len(), n * n, "matrix data has wrong length");
    let mut a = data.to_vec();
    let norm = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let target = 1e-12 * norm;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    vals.sort_by(f64::total_cmp);
    vals
}

/// Spectrum of a symmetric integer matrix, clustered into multiplicities.
pub fn eig_symmetric(m: &DenseMatrix) -> Result<Spectrum> {
    m.ensure_square()?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(Spectrum::from_values(jacobi_eigenvalues(&m.to_f64(), m.rows())))
}
