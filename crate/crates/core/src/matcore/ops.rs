use num_complex::Complex64;

use super::matrix::ComplexMatrix;

/// Which factor of a 2 (x) d bipartition to keep under a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    /// The qubit.
    A,
    /// The qudit.
    B,
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.n(), b.n());
    ComplexMatrix::from_fn(na * nb, |i, j| a[(i / nb, j / nb)] * b[(i % nb, j % nb)])
}

/// Tr(M M^dagger); equals Tr(M^2) for Hermitian M.
pub fn purity(m: &ComplexMatrix) -> f64 {
    m.inner(m).re
}

/// Transposes each of the four `d x d` qubit-indexed blocks of a `2d x 2d` matrix.
pub fn partial_transpose_b(m: &ComplexMatrix, d: usize) -> ComplexMatrix {
    assert_eq!(m.n(), 2 * d, "expected a 2d x 2d matrix");
    ComplexMatrix::from_fn(2 * d, |i, j| {
        let (a, k) = (i / d, i % d);
        let (b, l) = (j / d, j % d);
        m[(a * d + l, b * d + k)]
    })
}

/// Partial trace of a `2d x 2d` matrix over the complementary factor.
pub fn partial_trace(m: &ComplexMatrix, d: usize, keep: Subsystem) -> ComplexMatrix {
    assert_eq!(m.n(), 2 * d, "expected a 2d x 2d matrix");
    match keep {
        Subsystem::A => ComplexMatrix::from_fn(2, |a, b| {
            (0..d).map(|k| m[(a * d + k, b * d + k)]).sum::<Complex64>()
        }),
        Subsystem::B => ComplexMatrix::from_fn(d, |k, l| m[(k, l)] + m[(d + k, d + l)]),
    }
}
