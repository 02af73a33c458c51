//! Separability and absolute-separability criteria for 2 (x) d states.
//!
//! Every criterion returns a [`CriterionResult`] carrying a signed margin: a
//! nonnegative margin means the criterion's inequality holds and its
//! magnitude is the slack. Verdicts use [`VERDICT_TOL`]; callers wanting a
//! stricter threshold can read the raw margin.

mod classify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{lambda_min, Spectrum, Subsystem};
use crate::states::{BlockForm, DensityMatrix};

pub use classify::{classify, classify_spectrum_only, Summary};

/// Margins at or above `-VERDICT_TOL` count as holding.
pub const VERDICT_TOL: f64 = 1e-10;

/// Largest dimension at which a positive partial transpose implies separability.
pub const PPT_EXACT_MAX_D: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// lambda_1 <= lambda_{2d-1} + 2 sqrt(lambda_{2d-2} lambda_{2d})
    SpectralAbsSep,
    /// Positive partial transpose.
    Ppt,
    /// Tr(XZ) >= Tr(YY^dagger)
    BlockCoherence,
    /// S_L(rho_A) - S_L(rho_B) <= 2 [Tr(XZ) - Tr(YY^dagger)]
    EntropyGap,
    /// |Y|_2^2 <= lambda_min(X) lambda_min(Z)
    BlockNorm,
    /// Purity band bracketed by the spectrum.
    PurityBand,
    /// Purity at most 1/2 for zero-discord states with one maximally mixed factor.
    ZeroDiscordHalf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Implication {
    /// Violation certifies entanglement.
    NecessaryForSeparable,
    /// Holding certifies separability.
    SufficientForSeparable,
    /// Holding is equivalent to separability.
    NecessaryAndSufficientSeparable,
    /// Holding is equivalent to absolute separability.
    NecessaryAndSufficientAbsSep,
    /// Violation rules out absolute separability.
    NecessaryForAbsSep,
    /// A bound with no separability consequence.
    BoundOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub name: Criterion,
    #[serde(with = "crate::serde_ext")]
    pub margin: f64,
    pub verdict: Verdict,
    pub implication: Implication,
}

impl CriterionResult {
    pub fn new(name: Criterion, margin: f64, implication: Implication) -> Self {
        let verdict = if margin >= -VERDICT_TOL {
            Verdict::Holds
        } else {
            Verdict::Violated
        };
        Self {
            name,
            margin,
            verdict,
            implication,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Right-hand sides of the purity balls, plus the state's own purity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallBounds {
    /// Tr X^2 + 2 lambda_min(X) lambda_min(Z) + Tr Z^2
    pub b1: f64,
    /// Tr X^2 + 2 Tr(XZ) + Tr Z^2
    pub b2: f64,
    /// 1/(N - 1) with N = 2d.
    pub classic: f64,
    pub purity: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallMembership {
    pub b1: bool,
    pub b2: bool,
    pub classic: bool,
}

impl BallBounds {
    pub fn in_b1(&self) -> bool {
        self.purity <= self.b1 + VERDICT_TOL
    }

    pub fn in_b2(&self) -> bool {
        self.purity <= self.b2 + VERDICT_TOL
    }

    pub fn in_classic(&self) -> bool {
        self.purity <= self.classic + VERDICT_TOL
    }

    pub fn membership(&self) -> BallMembership {
        BallMembership {
            b1: self.in_b1(),
            b2: self.in_b2(),
            classic: self.in_classic(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PurityBand {
    #[serde(with = "crate::serde_ext")]
    pub lower: f64,
    pub upper: f64,
}

/// Radius of the separable purity ball around the maximally mixed state in total dimension `2d`.
pub fn classic_radius(d: usize) -> f64 {
    1.0 / (2 * d - 1) as f64
}

/// The 2 (x) d spectral condition for absolute separability.
///
/// margin = lambda_{2d-1} + 2 sqrt(lambda_{2d-2} lambda_{2d}) - lambda_1
pub fn abs_sep_from_spectrum(s: &Spectrum) -> CriterionResult {
    let n = 2 * s.d();
    let margin = s.lambda(n - 1) + 2.0 * (s.lambda(n - 2) * s.lambda(n)).sqrt() - s.lambda(1);
    CriterionResult::new(
        Criterion::SpectralAbsSep,
        margin,
        Implication::NecessaryAndSufficientAbsSep,
    )
}

/// Same condition on a bare eigenvalue list (any order, length 2d >= 4).
pub fn abs_sep_margin(values: &[f64]) -> Result<f64> {
    if values.len() < 4 || values.len() % 2 != 0 {
        return Err(Error::domain(format!(
            "spectrum length {} must be even and at least 4",
            values.len()
        )));
    }
    let mut v: Vec<f64> = values.iter().map(|x| x.max(0.0)).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    let n = v.len();
    Ok(v[n - 2] + 2.0 * (v[n - 3] * v[n - 1]).sqrt() - v[0])
}

/// Minimum eigenvalue of the partial transpose.
pub fn ppt_verdict(rho: &DensityMatrix) -> Result<CriterionResult> {
    let margin = lambda_min(&rho.partial_transpose())?;
    let implication = if rho.d() <= PPT_EXACT_MAX_D {
        Implication::NecessaryAndSufficientSeparable
    } else {
        Implication::NecessaryForSeparable
    };
    Ok(CriterionResult::new(Criterion::Ppt, margin, implication))
}

/// margin = Tr(XZ) - Tr(YY^dagger); negative certifies entanglement.
pub fn block_coherence_margin(b: &BlockForm) -> CriterionResult {
    CriterionResult::new(
        Criterion::BlockCoherence,
        b.tr_xz() - b.tr_yy(),
        Implication::NecessaryForSeparable,
    )
}

/// Linear entropy 1 - Tr(rho^2).
pub fn linear_entropy(m: &crate::matcore::ComplexMatrix) -> f64 {
    1.0 - crate::matcore::purity(m)
}

/// margin = 2 [Tr(XZ) - Tr(YY^dagger)] - [S_L(rho_A) - S_L(rho_B)].
pub fn entropy_gap_margin(b: &BlockForm) -> CriterionResult {
    let d = b.d();
    let full = b.assemble();
    let rho_a = crate::matcore::partial_trace(&full, d, Subsystem::A);
    let rho_b = crate::matcore::partial_trace(&full, d, Subsystem::B);
    let margin =
        2.0 * (b.tr_xz() - b.tr_yy()) - (linear_entropy(&rho_a) - linear_entropy(&rho_b));
    CriterionResult::new(Criterion::EntropyGap, margin, Implication::NecessaryForSeparable)
}

/// margin = lambda_min(X) lambda_min(Z) - |Y|_2^2; nonnegative certifies separability.
pub fn block_norm_certificate(b: &BlockForm) -> Result<CriterionResult> {
    let margin = lambda_min(b.x())? * lambda_min(b.z())? - b.tr_yy();
    Ok(CriterionResult::new(
        Criterion::BlockNorm,
        margin,
        Implication::SufficientForSeparable,
    ))
}

pub fn ball_bounds(b: &BlockForm) -> Result<BallBounds> {
    let (x2, z2) = (b.tr_x2(), b.tr_z2());
    let lx = lambda_min(b.x())?.max(0.0);
    let lz = lambda_min(b.z())?.max(0.0);
    Ok(BallBounds {
        b1: x2 + 2.0 * lx * lz + z2,
        b2: x2 + 2.0 * b.tr_xz() + z2,
        classic: classic_radius(b.d()),
        purity: crate::matcore::purity(&b.assemble()),
    })
}

/// Purity must lie between the spectral lower and upper values for an absolutely separable state.
///
/// lower = (lambda_1 - lambda_{2d-1})^2 / (4 lambda_{2d-2}), upper = lambda_{2d-1} + 2 sqrt(lambda_{2d-2} lambda_{2d}).
/// When lambda_{2d-2} = 0 the lower value is +inf unless lambda_1 = lambda_{2d-1}, in which case it is 0.
pub fn purity_band(s: &Spectrum, purity: f64) -> Result<(PurityBand, CriterionResult)> {
    let from_spectrum = s.purity();
    if (purity - from_spectrum).abs() > 1e-8 {
        return Err(Error::domain(format!(
            "purity {purity} inconsistent with spectrum purity {from_spectrum}"
        )));
    }
    let n = 2 * s.d();
    let (l1, l_m2, l_m1, l_last) = (s.lambda(1), s.lambda(n - 2), s.lambda(n - 1), s.lambda(n));
    let lower = if l_m2 > 0.0 {
        (l1 - l_m1).powi(2) / (4.0 * l_m2)
    } else if l1 == l_m1 {
        0.0
    } else {
        f64::INFINITY
    };
    let upper = l_m1 + 2.0 * (l_m2 * l_last).sqrt();
    let margin = (purity - lower).min(upper - purity);
    Ok((
        PurityBand { lower, upper },
        CriterionResult::new(Criterion::PurityBand, margin, Implication::NecessaryForAbsSep),
    ))
}

/// E = 4 lambda_{2d-2} (lambda_{2d-1} + 2 sqrt(lambda_{2d-2} lambda_{2d})) - 4 lambda_{2d-2} lambda_{2d}.
pub fn band_gap(s: &Spectrum) -> f64 {
    let n = 2 * s.d();
    let (a, b, c) = (s.lambda(n - 2), s.lambda(n - 1), s.lambda(n));
    4.0 * a * (b + 2.0 * (a * c).sqrt()) - 4.0 * a * c
}
