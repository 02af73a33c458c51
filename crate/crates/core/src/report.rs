use std::fmt;

use serde::{Deserialize, Serialize};

use crate::criteria::{
    BallBounds, BallMembership, Criterion, CriterionResult, PurityBand, Summary, Verdict,
};
use crate::error::{Error, Result};

/// Everything the classifier knows about one state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub id: String,
    pub d: usize,
    pub purity: f64,
    pub spectrum: Vec<f64>,
    pub criteria: Vec<CriterionResult>,
    pub bounds: Option<BallBounds>,
    pub membership: Option<BallMembership>,
    pub purity_band: PurityBand,
    pub band_gap: f64,
    pub summary: Summary,
    pub contradiction: bool,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn criterion(&self, name: Criterion) -> Option<&CriterionResult> {
        self.criteria.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            path: "<report>".into(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

fn criterion_label(c: Criterion) -> &'static str {
    match c {
        Criterion::SpectralAbsSep => "spectral abs-sep",
        Criterion::Ppt => "partial transpose",
        Criterion::BlockCoherence => "Tr(XZ) >= Tr(YY+)",
        Criterion::EntropyGap => "linear-entropy gap",
        Criterion::BlockNorm => "block-norm certificate",
        Criterion::PurityBand => "purity band",
        Criterion::ZeroDiscordHalf => "zero-discord purity <= 1/2",
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "state:    {} (2 x {})", self.id, self.d)?;
        writeln!(f, "purity:   {:.12}", self.purity)?;
        let spec: Vec<String> = self.spectrum.iter().map(|v| format!("{v:.9}")).collect();
        writeln!(f, "spectrum: [{}]", spec.join(", "))?;
        writeln!(f)?;
        writeln!(f, "{:<26} {:>18}  {:<9} implication", "criterion", "margin", "verdict")?;
        for c in &self.criteria {
            let verdict = match c.verdict {
                Verdict::Holds => "holds",
                Verdict::Violated => "violated",
            };
            let implication = serde_json::to_value(c.implication)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default();
            writeln!(
                f,
                "{:<26} {:>18.10e}  {:<9} {}",
                criterion_label(c.name),
                c.margin,
                verdict,
                implication
            )?;
        }
        writeln!(f)?;
        if let (Some(b), Some(m)) = (&self.bounds, &self.membership) {
            writeln!(f, "ball B1       {:.12}  member: {}", b.b1, m.b1)?;
            writeln!(f, "ball B2       {:.12}  member: {}", b.b2, m.b2)?;
            writeln!(f, "classic ball  {:.12}  member: {}", b.classic, m.classic)?;
        }
        writeln!(
            f,
            "purity band   [{:.9}, {:.9}]   band gap {:.6e}",
            self.purity_band.lower, self.purity_band.upper, self.band_gap
        )?;
        writeln!(f)?;
        writeln!(f, "summary: {}", self.summary.as_str())?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::{classify, classify_spectrum_only};
    use crate::states::{sigma1, NonNormalState};

    #[test]
    fn json_round_trip() {
        let r = classify(&sigma1(), "sigma1").unwrap();
        assert_eq!(ClassificationReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn infinite_lower_band_round_trips() {
        let r = classify_spectrum_only(&NonNormalState::ha24(), "ha24").unwrap();
        assert!(r.purity_band.lower.is_infinite());
        let json = r.to_json();
        assert!(json.contains("\"inf\""));
        assert_eq!(ClassificationReport::from_json(&json).unwrap(), r);
    }

    #[test]
    fn key_order_is_stable() {
        let json = classify(&sigma1(), "sigma1").unwrap().to_json();
        let keys = ["\"id\"", "\"d\"", "\"purity\"", "\"spectrum\"", "\"criteria\"", "\"summary\""];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn display_mentions_summary() {
        let text = classify(&sigma1(), "sigma1").unwrap().to_string();
        assert!(text.contains("summary: abs-sep"));
    }
}
