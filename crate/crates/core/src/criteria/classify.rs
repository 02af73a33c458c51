use serde::{Deserialize, Serialize};

use super::{
    abs_sep_from_spectrum, ball_bounds, band_gap, block_coherence_margin, block_norm_certificate,
    entropy_gap_margin, ppt_verdict, purity_band, PPT_EXACT_MAX_D,
};
use crate::error::Result;
use crate::report::ClassificationReport;
use crate::states::{DensityMatrix, NonNormalState};

/// Aggregate verdict, ordered so that AbsSep implies SeparableCertified implies not Entangled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Summary {
    Entangled,
    SeparableCertified,
    AbsSep,
    Indeterminate,
}

impl Summary {
    pub fn as_str(self) -> &'static str {
        match self {
            Summary::Entangled => "entangled",
            Summary::SeparableCertified => "separable-certified",
            Summary::AbsSep => "abs-sep",
            Summary::Indeterminate => "indeterminate",
        }
    }
}

/// Runs every criterion on a validated state.
pub fn classify(rho: &DensityMatrix, id: &str) -> Result<ClassificationReport> {
    let blocks = rho.blocks();
    let spectrum = rho.spectrum();
    let purity = rho.purity();

    let spectral = abs_sep_from_spectrum(spectrum);
    let ppt = ppt_verdict(rho)?;
    let coherence = block_coherence_margin(&blocks);
    let entropy = entropy_gap_margin(&blocks);
    let block_norm = block_norm_certificate(&blocks)?;
    let (band, band_result) = purity_band(spectrum, spectrum.purity())?;
    let bounds = ball_bounds(&blocks)?;

    let necessary_violated = !coherence.holds() || !entropy.holds() || !ppt.holds();
    let certified = block_norm.holds() || (ppt.holds() && rho.d() <= PPT_EXACT_MAX_D);
    let abs_sep = spectral.holds();

    let mut notes = Vec::new();
    let mut contradiction = false;
    if abs_sep && necessary_violated {
        contradiction = true;
        notes.push(
            "contradiction: spectrum condition holds but a necessary separability condition fails"
                .to_string(),
        );
    }
    if certified && necessary_violated {
        contradiction = true;
        notes.push(
            "contradiction: separability certified but a necessary separability condition fails"
                .to_string(),
        );
    }
    if (certified || abs_sep) && !bounds.in_b2() {
        contradiction = true;
        notes.push("contradiction: separable state lies outside ball B2".to_string());
    }
    if abs_sep && !band_result.holds() {
        contradiction = true;
        notes.push("contradiction: spectrum condition holds but purity band fails".to_string());
    }

    let summary = if abs_sep {
        Summary::AbsSep
    } else if necessary_violated {
        Summary::Entangled
    } else if certified {
        Summary::SeparableCertified
    } else {
        Summary::Indeterminate
    };

    Ok(ClassificationReport {
        id: id.to_string(),
        d: rho.d(),
        purity,
        spectrum: spectrum.values().to_vec(),
        criteria: vec![spectral, ppt, coherence, entropy, block_norm, band_result],
        bounds: Some(bounds),
        membership: Some(bounds.membership()),
        purity_band: band,
        band_gap: band_gap(spectrum),
        summary,
        contradiction,
        notes,
    })
}

/// Report for a matrix that failed validation but carries a tabulated spectrum.
/// Only the spectrum-based criteria are evaluated.
pub fn classify_spectrum_only(state: &NonNormalState, id: &str) -> Result<ClassificationReport> {
    let spectrum = &state.published_spectrum;
    let purity = spectrum.purity();
    let spectral = abs_sep_from_spectrum(spectrum);
    let (band, band_result) = purity_band(spectrum, purity)?;
    let notes = vec![format!(
        "matrix is not Hermitian (max |M - M^dagger| = {:.6}); only spectrum criteria evaluated, on the tabulated spectrum",
        state.hermitian_deviation
    )];
    let summary = if spectral.holds() {
        Summary::AbsSep
    } else {
        Summary::Indeterminate
    };
    Ok(ClassificationReport {
        id: id.to_string(),
        d: state.d,
        purity,
        spectrum: spectrum.values().to_vec(),
        criteria: vec![spectral, band_result],
        bounds: None,
        membership: None,
        purity_band: band,
        band_gap: band_gap(spectrum),
        summary,
        contradiction: false,
        notes,
    })
}
