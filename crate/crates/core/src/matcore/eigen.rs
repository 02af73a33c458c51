//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot entry, then applies the
//! classical real Jacobi rotation to the resulting real 2x2 problem. Sweeps run
//! over all (p, q) pairs in row order until the off-diagonal Frobenius norm
//! drops below `OFF_DIAGONAL_TOL * max(1, |M|_F)`.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Inputs further than this from Hermitian (entrywise) are rejected.
pub const HERMITIAN_TOL: f64 = 1e-9;

/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted descending, with the matching eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// V diag(values) V^dagger
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|k| v[(i, k)] * self.values[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

/// Symmetrizes `m` if it is within [`HERMITIAN_TOL`] of Hermitian.
pub fn hermitian_repair(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let dev = m.hermitian_deviation();
    if dev > HERMITIAN_TOL {
        return Err(Error::NotHermitian {
            max_deviation: dev,
            tolerance: HERMITIAN_TOL,
        });
    }
    Ok(m.hermitian_part())
}

/// All eigenvalues of a Hermitian matrix, sorted descending.
pub fn eig_descending(m: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eigh(m)?.values)
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eigh(m: &ComplexMatrix) -> Result<HermitianEigen> {
    let a = hermitian_repair(m)?;
    Ok(jacobi(a))
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn lambda_min(m: &ComplexMatrix) -> Result<f64> {
    Ok(*eig_descending(m)?.last().expect("n >= 1"))
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.n();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn jacobi(mut a: ComplexMatrix) -> HermitianEigen {
    let n = a.n();
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * a.frobenius_norm().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    // stable sort keeps ties in original index order
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let values = order.iter().map(|&i| diag[i]).collect();
    let vectors = ComplexMatrix::from_fn(n, |row, col| v[(row, order[col])]);
    HermitianEigen { values, vectors }
}

/// One Jacobi rotation annihilating a[p][q].
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / g;

    let theta = (aqq - app) / (2.0 * g);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = D R with D = diag(1, conj(phase)) on (p, q) and the real rotation R.
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.n();
    // A <- A J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    // A <- J^dagger A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    // V <- V J
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_y_eigenvalues() {
        let m = ComplexMatrix::from_vec(2, vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)])
            .unwrap();
        let e = eigh(&m).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-14);
        assert!((e.values[1] + 1.0).abs() < 1e-14);
        assert!(e.reconstruct().approx_eq(&m, 1e-13));
    }

    #[test]
    fn diagonal_input_is_sorted_with_stable_ties() {
        let m = ComplexMatrix::from_diagonal(&[0.1, 0.4, 0.1, 0.4]);
        let e = eigh(&m).unwrap();
        assert_eq!(e.values, vec![0.4, 0.4, 0.1, 0.1]);
        // tie order follows original index: columns 1, 3, 0, 2
        assert_eq!(e.vectors[(1, 0)], c(1.0, 0.0));
        assert_eq!(e.vectors[(3, 1)], c(1.0, 0.0));
        assert_eq!(e.vectors[(0, 2)], c(1.0, 0.0));
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(3);
        m[(0, 2)] = c(1e-6, 0.0);
        match eigh(&m) {
            Err(Error::NotHermitian { max_deviation, .. }) => {
                assert!((max_deviation - 1e-6).abs() < 1e-18)
            }
            other => panic!("expected NotHermitian, got {other:?}"),
        }
    }

    #[test]
    fn tiny_asymmetry_is_repaired() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = c(0.5, 0.0);
        m[(1, 0)] = c(0.5 + 1e-12, 0.0);
        let vals = eig_descending(&m).unwrap();
        assert!((vals[0] - 1.5).abs() < 1e-11);
        assert!((vals[1] - 0.5).abs() < 1e-11);
    }

    #[test]
    fn complex_3x3_reconstructs() {
        let m = ComplexMatrix::from_vec(
            3,
            vec![
                c(2.0, 0.0),
                c(0.3, 0.7),
                c(-0.1, 0.2),
                c(0.3, -0.7),
                c(1.0, 0.0),
                c(0.5, -0.5),
                c(-0.1, -0.2),
                c(0.5, 0.5),
                c(-1.0, 0.0),
            ],
        )
        .unwrap();
        let e = eigh(&m).unwrap();
        assert!(e.reconstruct().approx_eq(&m, 1e-12));
        let sum: f64 = e.values.iter().sum();
        assert!((sum - 2.0).abs() < 1e-12);
        let vv = &e.vectors.adjoint() * &e.vectors;
        assert!(vv.approx_eq(&ComplexMatrix::identity(3), 1e-12));
    }
}
