//! Parameterized state families on 2 (x) 2 and 2 (x) 3.
//!
//! Basis ordering throughout is the computational basis with the qubit index
//! slowest: |0>|0>, ..., |0>|d-1>, |1>|0>, ..., |1>|d-1>.

use num_complex::Complex64;

use super::density::{BlochVector, DensityMatrix};
use crate::error::{Error, Result};
use crate::matcore::{kron, ComplexMatrix};

fn check_unit_interval(name: &str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::domain(format!("{name} = {v} outside [0, 1]")));
    }
    Ok(())
}

/// (|01> - |10>) / sqrt(2)
pub fn singlet() -> [Complex64; 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [
        Complex64::new(0.0, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(-s, 0.0),
        Complex64::new(0.0, 0.0),
    ]
}

/// Pseudo-pure state `eps |psi><psi| + (1 - eps) I/4`.
pub fn build_pps(eps: f64, psi: &[Complex64; 4]) -> Result<DensityMatrix> {
    check_unit_interval("epsilon", eps)?;
    let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::domain(format!("pure state has squared norm {norm}, expected 1")));
    }
    let proj = ComplexMatrix::projector(psi);
    let noise = ComplexMatrix::identity(4).scale((1.0 - eps) / 4.0);
    DensityMatrix::new(&proj.scale(eps) + &noise, 2)
}

/// Closed-form descending spectrum of the singlet pseudo-pure state.
pub fn pps_singlet_spectrum(eps: f64) -> [f64; 4] {
    let low = (1.0 - eps) / 4.0;
    [(1.0 + 3.0 * eps) / 4.0, low, low, low]
}

/// Two-qubit zero-discord state
/// `p |psi><psi| (x) rho_1 + (1 - p) |psi_perp><psi_perp| (x) rho_2`
/// with `psi = alpha|0> + beta|1>`, `psi_perp = beta|0> - alpha|1>`, `beta = +sqrt(1 - alpha^2)`.
pub fn build_zero_discord(
    p: f64,
    alpha: f64,
    r1: &BlochVector,
    r2: &BlochVector,
) -> Result<DensityMatrix> {
    check_unit_interval("p", p)?;
    if !(-1.0..=1.0).contains(&alpha) {
        return Err(Error::domain(format!("alpha = {alpha} outside [-1, 1]")));
    }
    let beta = (1.0 - alpha * alpha).max(0.0).sqrt();
    let c = |x: f64| Complex64::new(x, 0.0);
    let psi = ComplexMatrix::projector(&[c(alpha), c(beta)]);
    let perp = ComplexMatrix::projector(&[c(beta), c(-alpha)]);
    let first = kron(&psi, &r1.qubit_state()).scale(p);
    let second = kron(&perp, &r2.qubit_state()).scale(1.0 - p);
    DensityMatrix::new(&first + &second, 2)
}

/// 2 (x) 2 isotropic state with fidelity parameter `f`.
pub fn build_isotropic(f: f64) -> Result<DensityMatrix> {
    check_unit_interval("f", f)?;
    let outer = (1.0 + 2.0 * f) / 6.0;
    let inner = (1.0 - f) / 3.0;
    let coh = (4.0 * f - 1.0) / 6.0;
    let m = ComplexMatrix::from_real_rows(&[
        vec![outer, 0.0, 0.0, coh],
        vec![0.0, inner, 0.0, 0.0],
        vec![0.0, 0.0, inner, 0.0],
        vec![coh, 0.0, 0.0, outer],
    ])?;
    DensityMatrix::new(m, 2)
}

/// Mixture weights `(alpha, (4 gamma + 2 alpha - 1)/3, (1 - gamma - 2 alpha)/3)` of the 2 (x) 3 family.
pub fn family23_weights(alpha: f64, gamma: f64) -> [f64; 3] {
    [
        alpha,
        (4.0 * gamma + 2.0 * alpha - 1.0) / 3.0,
        (1.0 - gamma - 2.0 * alpha) / 3.0,
    ]
}

/// Whether (alpha, gamma) lies in the family's domain.
pub fn family23_admissible(alpha: f64, gamma: f64) -> bool {
    (0.0..=0.5).contains(&alpha)
        && (0.0..=1.0).contains(&gamma)
        && family23_weights(alpha, gamma).iter().all(|&w| w >= -1e-12)
}

/// 2 (x) 3 family:
/// `alpha (|02><02| + |12><12|) + w_s |psi-><psi-| + w_m (|00><00| + |01><01| + |10><10| + |11><11|)`.
pub fn build_family23(alpha: f64, gamma: f64) -> Result<DensityMatrix> {
    if !(0.0..=0.5).contains(&alpha) {
        return Err(Error::domain(format!("alpha = {alpha} outside [0, 1/2]")));
    }
    check_unit_interval("gamma", gamma)?;
    let [wa, ws, wm] = family23_weights(alpha, gamma);
    let names = ["alpha", "4*gamma + 2*alpha - 1", "1 - gamma - 2*alpha"];
    for (w, name) in [wa, ws * 3.0, wm * 3.0].iter().zip(names) {
        if *w < -1e-12 {
            return Err(Error::domain(format!("mixture weight {name} = {w} is negative")));
        }
    }
    // rows/cols: 00, 01, 02, 10, 11, 12
    let mut m = ComplexMatrix::zeros(6);
    let set = |m: &mut ComplexMatrix, i: usize, j: usize, v: f64| m[(i, j)] = Complex64::new(v, 0.0);
    set(&mut m, 0, 0, wm);
    set(&mut m, 1, 1, wm + ws / 2.0);
    set(&mut m, 2, 2, wa);
    set(&mut m, 3, 3, wm + ws / 2.0);
    set(&mut m, 4, 4, wm);
    set(&mut m, 5, 5, wa);
    set(&mut m, 1, 3, -ws / 2.0);
    set(&mut m, 3, 1, -ws / 2.0);
    DensityMatrix::new(m, 3)
}

/// `(p|0><0| + (1-p)|1><1|) (x) I/2`.
pub fn build_product_p(p: f64) -> Result<DensityMatrix> {
    check_unit_interval("p", p)?;
    let qubit = ComplexMatrix::from_diagonal(&[p, 1.0 - p]);
    DensityMatrix::new(kron(&qubit, &ComplexMatrix::identity(2).scale(0.5)), 2)
}

/// Maximally mixed state on 2 (x) d.
pub fn maximally_mixed(d: usize) -> Result<DensityMatrix> {
    if d < 2 {
        return Err(Error::domain("d must be at least 2"));
    }
    DensityMatrix::new(ComplexMatrix::identity(2 * d).scale(1.0 / (2 * d) as f64), d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pps_domain() {
        assert!(build_pps(-0.1, &singlet()).is_err());
        assert!(build_pps(1.1, &singlet()).is_err());
        let mut psi = singlet();
        psi[0] = Complex64::new(0.1, 0.0);
        assert!(build_pps(0.5, &psi).is_err());
    }

    #[test]
    fn pps_at_zero_is_maximally_mixed() {
        let rho = build_pps(0.0, &singlet()).unwrap();
        assert!(rho.matrix().approx_eq(&ComplexMatrix::identity(4).scale(0.25), 0.0));
    }

    #[test]
    fn zero_discord_rejects_long_bloch_vector() {
        assert!(BlochVector::new([0.0, 0.0, 0.51]).is_err());
        assert!(build_zero_discord(1.2, 1.0, &BlochVector::ZERO, &BlochVector::ZERO).is_err());
        assert!(build_zero_discord(0.5, 1.5, &BlochVector::ZERO, &BlochVector::ZERO).is_err());
    }

    #[test]
    fn zero_discord_p_one_collapses() {
        let r1 = BlochVector::new([0.1, 0.2, -0.3]).unwrap();
        let r2 = BlochVector::new([0.0, 0.4, 0.0]).unwrap();
        let alpha: f64 = 0.6;
        let rho = build_zero_discord(1.0, alpha, &r1, &r2).unwrap();
        let c = |x: f64| Complex64::new(x, 0.0);
        let psi = ComplexMatrix::projector(&[c(alpha), c((1.0 - alpha * alpha).sqrt())]);
        assert!(rho.matrix().approx_eq(&kron(&psi, &r1.qubit_state()), 1e-15));
    }

    #[test]
    fn family23_weight_errors_name_the_weight() {
        let err = build_family23(0.1, 0.1).unwrap_err();
        assert!(err.to_string().contains("4*gamma + 2*alpha - 1"), "{err}");
        let err = build_family23(0.45, 0.5).unwrap_err();
        assert!(err.to_string().contains("1 - gamma - 2*alpha"), "{err}");
        assert!(build_family23(0.6, 0.5).is_err());
    }

    #[test]
    fn family23_trace_is_one_across_domain() {
        for i in 0..=10 {
            for j in 0..=10 {
                let (a, g) = (0.05 * i as f64, 0.1 * j as f64);
                if family23_admissible(a, g) {
                    let rho = build_family23(a, g).unwrap();
                    assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);
                }
            }
        }
    }
}
