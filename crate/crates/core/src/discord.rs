//! Zero-discord two-qubit states: purity bounds and absolute-separability thresholds,
//! plus the closed-form discord of the singlet pseudo-pure state.

use serde::{Deserialize, Serialize};

use crate::criteria::{abs_sep_margin, Criterion, CriterionResult, Implication};
use crate::error::{Error, Result};
use crate::roots::{first_crossing, BISECT_WIDTH};
use crate::states::{build_zero_discord, BlochVector, DensityMatrix};

/// Parameters of `p |psi><psi| (x) rho_1 + (1 - p) |psi_perp><psi_perp| (x) rho_2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZdParams {
    pub p: f64,
    pub alpha: f64,
    pub r1: BlochVector,
    pub r2: BlochVector,
}

impl ZdParams {
    pub fn new(p: f64, alpha: f64, r1: BlochVector, r2: BlochVector) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::domain(format!("p = {p} outside [0, 1]")));
        }
        if !(-1.0..=1.0).contains(&alpha) {
            return Err(Error::domain(format!("alpha = {alpha} outside [-1, 1]")));
        }
        Ok(Self { p, alpha, r1, r2 })
    }

    pub fn state(&self) -> Result<DensityMatrix> {
        build_zero_discord(self.p, self.alpha, &self.r1, &self.r2)
    }
}

/// Purity of a qubit with Bloch vector `r` in the |r| <= 1/2 convention.
fn qubit_purity(r: &BlochVector) -> f64 {
    0.5 + 2.0 * r.norm().powi(2)
}

/// `min(1/2 + 2|r_1|^2, 1/2 + 2|r_2|^2)`, the claimed p-independent purity bound.
///
/// The exact purity is `p^2 Tr(rho_1^2) + (1-p)^2 Tr(rho_2^2)`, which reaches
/// `Tr(rho_1^2)` at p = 1 and `Tr(rho_2^2)` at p = 0; the bound therefore only
/// holds for every p when `|r_1| = |r_2|`. See [`zero_discord_purity_max`].
pub fn zero_discord_purity_bound(params: &ZdParams) -> f64 {
    qubit_purity(&params.r1).min(qubit_purity(&params.r2))
}

/// The tight p-independent bound `max(Tr rho_1^2, Tr rho_2^2)`.
pub fn zero_discord_purity_max(params: &ZdParams) -> f64 {
    qubit_purity(&params.r1).max(qubit_purity(&params.r2))
}

/// Which factor of the zero-discord state is maximally mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedFactor {
    /// rho_1 = I/2, rho_2 free.
    First,
    /// rho_2 = I/2, rho_1 free.
    Second,
}

/// margin = 1/2 - purity for the state with one factor maximally mixed.
pub fn half_purity_check(which: MixedFactor, p: f64, other: &BlochVector) -> Result<CriterionResult> {
    let (r1, r2) = match which {
        MixedFactor::First => (BlochVector::ZERO, *other),
        MixedFactor::Second => (*other, BlochVector::ZERO),
    };
    let rho = build_zero_discord(p, 1.0, &r1, &r2)?;
    Ok(CriterionResult::new(
        Criterion::ZeroDiscordHalf,
        0.5 - rho.purity(),
        Implication::BoundOnly,
    ))
}

/// `x log2 x` with the continuous extension 0 at x = 0, for x = 1 + t.
fn xlog2x_shifted(t: f64) -> f64 {
    let x = 1.0 + t;
    if x == 0.0 {
        0.0
    } else {
        x * t.ln_1p() / std::f64::consts::LN_2
    }
}

/// Discord of the singlet pseudo-pure state:
/// `(1-e)/4 log2(1-e) - (1+e)/2 log2(1+e) + (1+3e)/4 log2(1+3e)`.
pub fn discord_pps(eps: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::domain(format!("epsilon = {eps} outside [0, 1]")));
    }
    Ok(xlog2x_shifted(-eps) / 4.0 - xlog2x_shifted(eps) / 2.0 + xlog2x_shifted(3.0 * eps) / 4.0)
}

/// Closed-form spectrum of the zero-discord state with rho_1 = I/2 and |r_2| = `r2_abs`.
pub fn half_mixed_spectrum(p: f64, r2_abs: f64) -> [f64; 4] {
    [
        (1.0 - p) * (1.0 + 2.0 * r2_abs) / 2.0,
        (1.0 - p) * (1.0 - 2.0 * r2_abs) / 2.0,
        p / 2.0,
        p / 2.0,
    ]
}

/// Purity of the same state: `p^2/2 + (1-p)^2 (1 + 4 r^2)/2`.
pub fn half_mixed_purity(p: f64, r2_abs: f64) -> f64 {
    p * p / 2.0 + (1.0 - p).powi(2) * (1.0 + 4.0 * r2_abs * r2_abs) / 2.0
}

/// Spectral absolute-separability margin of [`half_mixed_spectrum`], re-sorted at every p.
pub fn half_mixed_abs_sep_margin(p: f64, r2_abs: f64) -> f64 {
    abs_sep_margin(&half_mixed_spectrum(p, r2_abs)).expect("length 4")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// Smallest p in [0, 1/2] at which the state is absolutely separable.
    pub p_abs: Option<f64>,
    /// Smallest p in [0, 1/2] at which purity <= 1/3.
    pub p_ball: Option<f64>,
}

/// Onset of absolute separability and of classic-ball membership on p in [0, 1/2].
pub fn zero_discord_thresholds(r2_abs: f64) -> Result<Thresholds> {
    if !(0.0..=0.5).contains(&r2_abs) {
        return Err(Error::domain(format!("|r2| = {r2_abs} outside [0, 1/2]")));
    }
    let p_abs = first_crossing(
        |p| half_mixed_abs_sep_margin(p, r2_abs),
        0.0,
        0.5,
        1000,
        BISECT_WIDTH,
    );

    // (1 + c) p^2 - 2 c p + c - 2/3 = 0 with c = 1 + 4 r^2; discriminant (2 - c)/3.
    let c = 1.0 + 4.0 * r2_abs * r2_abs;
    let disc = (2.0 - c) / 3.0;
    let p_ball = if disc < 0.0 {
        None
    } else {
        let root = (c - disc.sqrt()) / (1.0 + c);
        (root <= 0.5).then_some(root.max(0.0))
    };
    Ok(Thresholds { p_abs, p_ball })
}
