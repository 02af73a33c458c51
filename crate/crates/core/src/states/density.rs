use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{
    eig_descending, partial_trace, partial_transpose_b, purity, ComplexMatrix, Spectrum,
    Subsystem, HERMITIAN_TOL, PSD_TOL,
};

/// A validated `2d x 2d` density matrix on a qubit (x) qudit system.
///
/// Hermitian within the construction tolerance (and then symmetrized), unit
/// trace within the same tolerance, minimum eigenvalue at least `-PSD_TOL`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    d: usize,
    spectrum: Spectrum,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, d: usize) -> Result<Self> {
        Self::with_tolerance(matrix, d, HERMITIAN_TOL)
    }

    /// Validates with `tol` governing both Hermiticity and the trace check.
    pub fn with_tolerance(matrix: ComplexMatrix, d: usize, tol: f64) -> Result<Self> {
        if d < 2 || matrix.n() != 2 * d {
            return Err(Error::dim(format!(
                "a 2 x {d} state needs a {}x{} matrix, got {}x{}",
                2 * d,
                2 * d,
                matrix.n(),
                matrix.n()
            )));
        }
        if matrix.as_slice().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::domain("matrix has non-finite entries"));
        }
        let dev = matrix.hermitian_deviation();
        if dev > tol {
            return Err(Error::NotHermitian {
                max_deviation: dev,
                tolerance: tol,
            });
        }
        let matrix = matrix.hermitian_part();
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::BadTrace {
                trace,
                tolerance: tol,
            });
        }
        let values = eig_descending(&matrix)?;
        let min = *values.last().unwrap();
        if min < -PSD_TOL {
            return Err(Error::NotPositive {
                min_eigenvalue: min,
            });
        }
        let spectrum = Spectrum::new(values, d)?;
        Ok(Self {
            matrix,
            d,
            spectrum,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Qudit dimension.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn purity(&self) -> f64 {
        purity(&self.matrix)
    }

    pub fn partial_trace(&self, keep: Subsystem) -> ComplexMatrix {
        partial_trace(&self.matrix, self.d, keep)
    }

    pub fn partial_transpose(&self) -> ComplexMatrix {
        partial_transpose_b(&self.matrix, self.d)
    }

    pub fn blocks(&self) -> BlockForm {
        BlockForm::from(self)
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i, j)]
    }
}

/// The `d x d` blocks of `[[X, Y], [Y^dagger, Z]]`, with X and Z indexed by qubit 0 and 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockForm {
    x: ComplexMatrix,
    y: ComplexMatrix,
    z: ComplexMatrix,
}

impl BlockForm {
    /// Accepts blocks only if they reassemble into a valid density matrix.
    pub fn new(x: ComplexMatrix, y: ComplexMatrix, z: ComplexMatrix) -> Result<Self> {
        let b = Self { x, y, z };
        b.to_density().map(|_| b)
    }

    pub fn x(&self) -> &ComplexMatrix {
        &self.x
    }

    pub fn y(&self) -> &ComplexMatrix {
        &self.y
    }

    pub fn z(&self) -> &ComplexMatrix {
        &self.z
    }

    pub fn d(&self) -> usize {
        self.x.n()
    }

    /// `[[X, Y], [Y^dagger, Z]]` without validation.
    pub fn assemble(&self) -> ComplexMatrix {
        let d = self.d();
        ComplexMatrix::from_fn(2 * d, |i, j| match (i < d, j < d) {
            (true, true) => self.x[(i, j)],
            (true, false) => self.y[(i, j - d)],
            (false, true) => self.y[(j, i - d)].conj(),
            (false, false) => self.z[(i - d, j - d)],
        })
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        let d = self.d();
        if self.y.n() != d || self.z.n() != d {
            return Err(Error::dim("blocks X, Y, Z must share one size"));
        }
        DensityMatrix::new(self.assemble(), d)
    }

    /// Tr(X Z), real for Hermitian X, Z.
    pub fn tr_xz(&self) -> f64 {
        // Tr(XZ) = sum_ij X_ij Z_ji = <X, Z^dagger>; Z is Hermitian.
        self.x.inner(&self.z).re
    }

    /// Tr(Y Y^dagger) = |Y|_2^2.
    pub fn tr_yy(&self) -> f64 {
        purity(&self.y)
    }

    pub fn tr_x2(&self) -> f64 {
        purity(&self.x)
    }

    pub fn tr_z2(&self) -> f64 {
        purity(&self.z)
    }
}

impl From<&DensityMatrix> for BlockForm {
    fn from(rho: &DensityMatrix) -> Self {
        let d = rho.d;
        Self {
            x: rho.matrix.block(0, 0, d),
            y: rho.matrix.block(0, d, d),
            z: rho.matrix.block(d, d, d),
        }
    }
}

pub fn to_block_form(rho: &DensityMatrix) -> BlockForm {
    BlockForm::from(rho)
}

pub fn from_block_form(b: &BlockForm) -> Result<DensityMatrix> {
    b.to_density()
}

/// Bloch vector of a single qubit, `rho = I/2 + r . sigma`, with |r| <= 1/2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    r: [f64; 3],
}

impl BlochVector {
    pub const ZERO: BlochVector = BlochVector { r: [0.0; 3] };
    pub const MAX_NORM: f64 = 0.5;

    pub fn new(r: [f64; 3]) -> Result<Self> {
        let v = Self { r };
        if !r.iter().all(|x| x.is_finite()) || v.norm() > Self::MAX_NORM + 1e-12 {
            return Err(Error::domain(format!(
                "Bloch vector norm {} exceeds 1/2; the qubit state would not be positive semidefinite",
                v.norm()
            )));
        }
        Ok(v)
    }

    /// Vector of length `norm` along z.
    pub fn along_z(norm: f64) -> Result<Self> {
        Self::new([0.0, 0.0, norm])
    }

    pub fn components(&self) -> [f64; 3] {
        self.r
    }

    pub fn norm(&self) -> f64 {
        self.r.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// I/2 + r . sigma
    pub fn qubit_state(&self) -> ComplexMatrix {
        let [x, y, z] = self.r;
        ComplexMatrix::from_vec(
            2,
            vec![
                Complex64::new(0.5 + z, 0.0),
                Complex64::new(x, -y),
                Complex64::new(x, y),
                Complex64::new(0.5 - z, 0.0),
            ],
        )
        .expect("2x2")
    }
}
