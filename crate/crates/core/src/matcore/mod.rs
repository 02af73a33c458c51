//! Dense complex matrices and the spectral primitives built on them.

mod eigen;
mod haar;
mod matrix;
mod ops;
mod spectrum;

pub use eigen::{
    eig_descending, eigh, hermitian_repair, lambda_min, HermitianEigen, HERMITIAN_TOL,
    OFF_DIAGONAL_TOL,
};
pub use haar::{ginibre, haar_unitary, haar_unitary_from, rng_from_seed, UnitaryMatrix};
pub use matrix::ComplexMatrix;
pub use ops::{kron, partial_trace, partial_transpose_b, purity, Subsystem};
pub use spectrum::{Spectrum, PSD_TOL, SUM_TOL};
