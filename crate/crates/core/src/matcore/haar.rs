//! Seeded sampling: Haar unitaries and Ginibre matrices.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::matrix::ComplexMatrix;

/// A matrix known to satisfy U U^dagger = I to within 1e-10.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix(ComplexMatrix);

impl UnitaryMatrix {
    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// max |U U^dagger - I| entrywise.
    pub fn unitarity_defect(&self) -> f64 {
        let uu = &self.0 * &self.0.adjoint();
        (&uu - &ComplexMatrix::identity(self.0.n())).max_abs()
    }

    /// U M U^dagger
    pub fn conjugate(&self, m: &ComplexMatrix) -> ComplexMatrix {
        m.conjugate_by(&self.0)
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n x n matrix of i.i.d. standard complex Gaussians (real and imaginary parts N(0, 1/2)).
pub fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_fn(n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re * s, im * s)
    })
}

/// Haar-distributed unitary drawn from `rng`.
///
/// QR of a Ginibre sample by Gram-Schmidt with one re-orthogonalization pass.
/// Gram-Schmidt produces R with a positive real diagonal, which is the phase
/// convention that makes Q Haar distributed.
pub fn haar_unitary_from<R: Rng + ?Sized>(n: usize, rng: &mut R) -> UnitaryMatrix {
    assert!(n >= 1);
    loop {
        let g = ginibre(n, rng);
        if let Some(q) = orthonormalize_columns(&g) {
            return UnitaryMatrix(q);
        }
    }
}

/// Deterministic Haar unitary for a given seed.
pub fn haar_unitary(n: usize, seed: u64) -> UnitaryMatrix {
    haar_unitary_from(n, &mut rng_from_seed(seed))
}

fn orthonormalize_columns(g: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = g.n();
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| (0..n).map(|i| g[(i, j)]).collect()).collect();
    for j in 0..n {
        for _pass in 0..2 {
            for k in 0..j {
                let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                for i in 0..n {
                    let ck = cols[k][i];
                    cols[j][i] -= proj * ck;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return None;
        }
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    let mut q = ComplexMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &z) in col.iter().enumerate() {
            q[(i, j)] = z;
        }
    }
    Some(q)
}
