//! Random states and parameters for property checks.

use rand::Rng;

use crate::criteria::abs_sep_margin;
use crate::discord::ZdParams;
use crate::matcore::{ginibre, ComplexMatrix};
use crate::states::{BlochVector, DensityMatrix};

/// Hilbert-Schmidt random state on C^2 (x) C^d: `G G^dagger / Tr(G G^dagger)`.
pub fn random_density<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityMatrix {
    let g = ginibre(2 * d, rng);
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale(1.0 / tr), d).expect("G G^dagger is a valid state")
}

/// Random probability vector of length n, uniform on the simplex.
pub fn random_probabilities<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let s: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= s);
    v
}

/// Random spectrum of length 2d passing the spectral abs-sep condition.
///
/// A simplex draw is pulled towards the flat spectrum until the condition holds;
/// the flat spectrum itself has margin 2/(2d) > 0, so the loop terminates.
pub fn random_abs_sep_spectrum<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<f64> {
    let n = 2 * d;
    let v = random_probabilities(n, rng);
    let mut t: f64 = rng.random();
    loop {
        let mixed: Vec<f64> = v.iter().map(|x| t * x + (1.0 - t) / n as f64).collect();
        if abs_sep_margin(&mixed).expect("even length") >= 0.0 {
            return mixed;
        }
        t *= 0.5;
    }
}

/// Diagonal state with the given spectrum.
pub fn diagonal_state(values: &[f64], d: usize) -> DensityMatrix {
    DensityMatrix::new(ComplexMatrix::from_diagonal(values), d).expect("valid spectrum")
}

/// Bloch vector drawn uniformly from the ball of radius 1/2.
pub fn random_bloch<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    loop {
        let r: [f64; 3] = std::array::from_fn(|_| rng.random_range(-0.5..=0.5));
        if r.iter().map(|x| x * x).sum::<f64>() <= 0.25 {
            return BlochVector::new(r).expect("inside the ball");
        }
    }
}

/// Uniform draw of (p, alpha, r_1, r_2) over the zero-discord parameter domain.
pub fn random_zd_params<R: Rng + ?Sized>(rng: &mut R) -> ZdParams {
    let p = rng.random_range(0.0..=1.0);
    let alpha = rng.random_range(-1.0..=1.0);
    ZdParams::new(p, alpha, random_bloch(rng), random_bloch(rng)).expect("in domain")
}
