use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Eigenvalues of a `2d x 2d` density matrix, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
    d: usize,
}

/// Eigenvalues at or above `-PSD_TOL` count as nonnegative.
pub const PSD_TOL: f64 = 1e-10;
/// Allowed deviation of the eigenvalue sum from 1.
pub const SUM_TOL: f64 = 1e-9;

impl Spectrum {
    /// Sorts `values` descending and checks it is a density spectrum of length 2d.
    pub fn new(mut values: Vec<f64>, d: usize) -> Result<Self> {
        if d < 2 || values.len() != 2 * d {
            return Err(Error::domain(format!(
                "spectrum of length {} does not describe a 2 x {d} system with d >= 2",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("spectrum contains non-finite values"));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        let min = *values.last().unwrap();
        if min < -PSD_TOL {
            return Err(Error::NotPositive {
                min_eigenvalue: min,
            });
        }
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::BadTrace {
                trace: sum,
                tolerance: SUM_TOL,
            });
        }
        Ok(Self { values, d })
    }

    /// Splits a flat eigenvalue list of length 2d.
    pub fn from_values(values: Vec<f64>) -> Result<Self> {
        if values.len() % 2 != 0 {
            return Err(Error::domain(format!(
                "spectrum length {} is odd",
                values.len()
            )));
        }
        let d = values.len() / 2;
        Self::new(values, d)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// 1-based access matching the usual lambda_1 >= ... >= lambda_2d labelling.
    /// Negative round-off values are clamped to zero.
    pub fn lambda(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.values.len());
        self.values[k - 1].max(0.0)
    }

    /// Sum of squared eigenvalues.
    pub fn purity(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }
}
