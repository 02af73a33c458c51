//! Reproduction tables: zero-discord thresholds, the product-family purity curves,
//! and parameter scans over the built-in families with their landmark points.

use std::fmt::Write as _;

use crate::criteria::{
    abs_sep_from_spectrum, abs_sep_margin, ball_bounds, classify, Criterion, Summary,
};
use crate::discord::{half_mixed_abs_sep_margin, zero_discord_thresholds};
use crate::error::{Error, Result};
use crate::roots::{bisect, first_crossing, BISECT_WIDTH};
use crate::states::{
    build_family23, build_product_p, family23_weights, pps_singlet_spectrum, FamilySpec,
    FamilyTag, NamedState,
};

/// Rows of the zero-discord threshold table: `(|r_2|, printed p_abs, printed p_ball)`.
pub const TABLE1_PRINTED: [(f64, Option<f64>, Option<f64>); 6] = [
    (0.0, Some(0.15), Some(0.211)),
    (0.1, Some(0.213), Some(0.2325)),
    (0.2, Some(0.291), Some(0.29205)),
    (0.3, Some(0.38), Some(0.38056)),
    (0.4, Some(0.483), Some(0.49)),
    (0.5, None, None),
];

/// Agreement window between derived and printed endpoints.
pub const TABLE1_TOLERANCE: f64 = 0.005;

/// Printed onset of absolute separability for the 2 (x) 3 family at gamma = 1/3.
pub const PRINTED_FAMILY23_ONSET: f64 = 0.019;
/// Printed eigenvalue-ordering crossover for the same family.
pub const PRINTED_FAMILY23_CROSSOVER: f64 = 0.134;
/// Printed largest mixing parameter at which the singlet pseudo-pure state is absolutely separable.
pub const PRINTED_PPS_THRESHOLD: f64 = 1.0 / 33.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Table1Row {
    pub r2_abs: f64,
    pub p_abs: Option<f64>,
    pub p_ball: Option<f64>,
    pub printed_p_abs: Option<f64>,
    pub printed_p_ball: Option<f64>,
}

fn delta(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(a), Some(b)) => Some((a - b).abs()),
        (None, None) => Some(0.0),
        _ => None,
    }
}

impl Table1Row {
    pub fn delta_abs(&self) -> Option<f64> {
        delta(self.p_abs, self.printed_p_abs)
    }

    pub fn delta_ball(&self) -> Option<f64> {
        delta(self.p_ball, self.printed_p_ball)
    }

    /// Both endpoints agree with the printed ones (absent on both sides counts as agreement).
    pub fn agrees(&self) -> bool {
        [self.delta_abs(), self.delta_ball()]
            .iter()
            .all(|d| d.is_some_and(|d| d <= TABLE1_TOLERANCE))
    }
}

pub fn table1() -> Vec<Table1Row> {
    TABLE1_PRINTED
        .iter()
        .map(|&(r, printed_p_abs, printed_p_ball)| {
            let t = zero_discord_thresholds(r).expect("table radii are in range");
            Table1Row {
                r2_abs: r,
                p_abs: t.p_abs,
                p_ball: t.p_ball,
                printed_p_abs,
                printed_p_ball,
            }
        })
        .collect()
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), |x| x.to_string())
}

fn flag(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut s =
        String::from("r2_abs,p_abs,p_ball,printed_p_abs,printed_p_ball,delta_abs,delta_ball\n");
    for r in rows {
        writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.r2_abs,
            opt(r.p_abs),
            opt(r.p_ball),
            opt(r.printed_p_abs),
            opt(r.printed_p_ball),
            opt(r.delta_abs()),
            opt(r.delta_ball())
        )
        .unwrap();
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Row {
    pub p: f64,
    pub purity: f64,
    pub b1: f64,
    pub b2: f64,
    pub classic: f64,
    pub abs_sep: bool,
}

/// Purity and ball bounds of `(p|0><0| + (1-p)|1><1|) (x) I/2` on an even grid of p in [0, 1/2].
pub fn fig1(samples: usize) -> Result<Vec<Fig1Row>> {
    if samples < 2 {
        return Err(Error::domain(format!("samples = {samples} must be at least 2")));
    }
    (0..samples)
        .map(|i| {
            let p = 0.5 * i as f64 / (samples - 1) as f64;
            let rho = build_product_p(p)?;
            let b = ball_bounds(&rho.blocks())?;
            Ok(Fig1Row {
                p,
                purity: rho.purity(),
                b1: b.b1,
                b2: b.b2,
                classic: b.classic,
                abs_sep: abs_sep_from_spectrum(rho.spectrum()).holds(),
            })
        })
        .collect()
}

pub fn fig1_csv(rows: &[Fig1Row]) -> String {
    let mut s = String::from("p,purity,b1,b2,classic,abs_sep_flag\n");
    for r in rows {
        writeln!(
            s,
            "{},{},{},{},{},{}",
            r.p,
            r.purity,
            r.b1,
            r.b2,
            r.classic,
            flag(r.abs_sep)
        )
        .unwrap();
    }
    s
}

/// Onset of absolute separability for the product family, found by bisection.
pub fn fig1_abs_sep_onset() -> f64 {
    first_crossing(|p| half_mixed_abs_sep_margin(p, 0.0), 0.0, 0.5, 1000, BISECT_WIDTH)
        .expect("the product family becomes absolutely separable before p = 1/2")
}

/// Smallest p at which the product family enters the classic ball.
pub fn fig1_classic_entry() -> f64 {
    zero_discord_thresholds(0.0)
        .expect("0 is in range")
        .p_ball
        .expect("the product family enters the classic ball")
}

fn spectral_margin_of(spec: FamilySpec) -> Result<f64> {
    match spec.build()? {
        NamedState::Valid(rho) => Ok(abs_sep_from_spectrum(rho.spectrum()).margin),
        NamedState::NonNormal(s) => Ok(abs_sep_from_spectrum(&s.published_spectrum).margin),
    }
}

/// Largest epsilon for which the singlet pseudo-pure spectrum passes the spectral condition.
pub fn pps_abs_sep_threshold() -> f64 {
    let margin = |e: f64| abs_sep_margin(&pps_singlet_spectrum(e)).expect("length 4");
    first_crossing(|e| -margin(e), 0.0, 1.0, 1000, BISECT_WIDTH)
        .expect("the pure singlet is not absolutely separable")
}

/// Interval of alpha on which the 2 (x) 3 family at fixed gamma is absolutely separable.
pub fn family23_abs_sep_interval(gamma: f64) -> Result<Option<(f64, f64)>> {
    let (lo, hi) = family23_alpha_range(gamma)?;
    let margin = |a: f64| {
        spectral_margin_of(FamilySpec::Family23 { alpha: a, gamma }).expect("admissible alpha")
    };
    let Some(onset) = first_crossing(margin, lo, hi, 2000, BISECT_WIDTH) else {
        return Ok(None);
    };
    // Continue from just past the onset to where the margin turns negative again.
    let start = (onset + 1e-6).min(hi);
    if margin(start) < 0.0 {
        return Ok(Some((onset, onset)));
    }
    let end = first_crossing(|a| -margin(a) - f64::MIN_POSITIVE, start, hi, 2000, BISECT_WIDTH)
        .unwrap_or(hi);
    Ok(Some((onset, end)))
}

/// Admissible alpha interval at this gamma: all three mixture weights nonnegative.
fn family23_alpha_range(gamma: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::domain(format!("gamma = {gamma} outside [0, 1]")));
    }
    let lo = ((1.0 - 4.0 * gamma) / 2.0).max(0.0);
    let hi = ((1.0 - gamma) / 2.0).min(0.5);
    if hi < lo {
        return Err(Error::domain(format!("no admissible alpha at gamma = {gamma}")));
    }
    Ok((lo, hi))
}

/// Alpha at which the doubly degenerate eigenvalue alpha meets the triply degenerate one.
pub fn family23_crossover(gamma: f64) -> Result<f64> {
    let (lo, hi) = family23_alpha_range(gamma)?;
    let gap = |a: f64| {
        let [wa, _, wm] = family23_weights(a, gamma);
        wa - wm
    };
    if gap(lo) >= 0.0 || gap(hi) < 0.0 {
        return Err(Error::domain(format!("no eigenvalue crossover at gamma = {gamma}")));
    }
    Ok(bisect(gap, lo, hi, BISECT_WIDTH))
}

/// Inclusive grid `lo, lo + step, ..., hi` for a named parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamRange {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl ParamRange {
    pub fn new(name: impl Into<String>, lo: f64, hi: f64, step: f64) -> Result<Self> {
        let name = name.into();
        if ![lo, hi, step].iter().all(|v| v.is_finite()) {
            return Err(Error::domain(format!("range for {name} must be finite")));
        }
        if step <= 0.0 {
            return Err(Error::domain(format!("step for {name} must be positive")));
        }
        if hi < lo {
            return Err(Error::domain(format!("range for {name} has hi < lo")));
        }
        Ok(Self { name, lo, hi, step })
    }

    pub fn points(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        let mut v: Vec<f64> = (0..=n).map(|i| self.lo + self.step * i as f64).collect();
        if let Some(last) = v.last_mut() {
            if (*last - self.hi).abs() < 1e-9 * self.step.max(1.0) {
                *last = self.hi;
            }
        }
        v
    }
}

impl std::str::FromStr for ParamRange {
    type Err = Error;

    /// Parses `name=lo:hi:step`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("range '{s}' must look like name=lo:hi:step"));
        let (name, rest) = s.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = rest.split(':').collect();
        let [lo, hi, step] = parts.as_slice() else {
            return Err(bad());
        };
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
        Self::new(name.trim(), num(lo)?, num(hi)?, num(step)?)
    }
}

/// One grid point of a family scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub params: Vec<f64>,
    pub purity: f64,
    pub margins: Vec<f64>,
    pub b1: f64,
    pub b2: f64,
    pub classic: f64,
    pub summary: Summary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanOutput {
    pub family: FamilyTag,
    pub param_names: Vec<String>,
    pub rows: Vec<ScanRow>,
    /// Landmarks and discrepancy annotations.
    pub notes: Vec<String>,
}

const SCAN_CRITERIA: [(Criterion, &str); 6] = [
    (Criterion::SpectralAbsSep, "margin_spectral"),
    (Criterion::Ppt, "margin_ppt"),
    (Criterion::BlockCoherence, "margin_block_coherence"),
    (Criterion::EntropyGap, "margin_entropy_gap"),
    (Criterion::BlockNorm, "margin_block_norm"),
    (Criterion::PurityBand, "margin_purity_band"),
];

/// Evaluates every criterion over the Cartesian grid of `ranges`; other parameters keep their defaults
/// unless overridden in `fixed`.
pub fn scan(family: FamilyTag, ranges: &[ParamRange], fixed: &[(String, f64)]) -> Result<ScanOutput> {
    if ranges.is_empty() {
        return Err(Error::domain("scan needs at least one range"));
    }
    if family == FamilyTag::Ha24 {
        return Err(Error::domain("ha24 has no parameters to scan"));
    }
    let grids: Vec<Vec<f64>> = ranges.iter().map(ParamRange::points).collect();
    let mut rows = Vec::new();
    let mut idx = vec![0usize; ranges.len()];
    'outer: loop {
        let mut params: Vec<(String, f64)> = fixed.to_vec();
        let values: Vec<f64> = idx.iter().zip(&grids).map(|(&i, g)| g[i]).collect();
        params.extend(ranges.iter().map(|r| r.name.clone()).zip(values.iter().copied()));
        let spec = FamilySpec::from_params(family, &params)?;
        let rho = spec
            .build()?
            .into_density()
            .ok_or_else(|| Error::domain("scanned family produced a non-normal matrix"))?;
        let report = classify(&rho, family.name())?;
        let bounds = report.bounds.expect("valid states carry bounds");
        rows.push(ScanRow {
            params: values,
            purity: report.purity,
            margins: SCAN_CRITERIA
                .iter()
                .map(|(c, _)| report.criterion(*c).map_or(f64::NAN, |r| r.margin))
                .collect(),
            b1: bounds.b1,
            b2: bounds.b2,
            classic: bounds.classic,
            summary: report.summary,
        });

        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < grids[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }

    let param_names = ranges.iter().map(|r| r.name.clone()).collect();
    let mut out = ScanOutput {
        family,
        param_names,
        rows,
        notes: Vec::new(),
    };
    out.notes = scan_notes(&out, fixed)?;
    Ok(out)
}

fn fixed_or_default(family: FamilyTag, fixed: &[(String, f64)], name: &str) -> Option<f64> {
    fixed
        .iter()
        .rev()
        .find(|(k, _)| k == name)
        .map(|(_, v)| *v)
        .or_else(|| family.parameters().iter().find(|(k, _)| *k == name).map(|(_, v)| *v))
}

fn scan_notes(out: &ScanOutput, fixed: &[(String, f64)]) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let scanned = |name: &str| out.param_names.iter().any(|n| n == name);
    match out.family {
        FamilyTag::Family23 if scanned("alpha") && !scanned("gamma") => {
            let gamma = fixed_or_default(out.family, fixed, "gamma").unwrap_or(1.0 / 3.0);
            if let Some((onset, end)) = family23_abs_sep_interval(gamma)? {
                notes.push(format!(
                    "landmark: spectral abs-sep holds for alpha in [{onset:.10}, {end:.10}] at gamma = {gamma}"
                ));
            } else {
                notes.push(format!("landmark: no abs-sep alpha at gamma = {gamma}"));
            }
            if let Ok(x) = family23_crossover(gamma) {
                notes.push(format!(
                    "landmark: eigenvalue ordering changes at alpha = {x:.10}"
                ));
            }
            if (gamma - 1.0 / 3.0).abs() < 1e-12 {
                let m = spectral_margin_of(FamilySpec::Family23 {
                    alpha: PRINTED_FAMILY23_ONSET,
                    gamma,
                })?;
                notes.push(format!(
                    "discrepancy: printed abs-sep onset alpha = {PRINTED_FAMILY23_ONSET} is unconfirmed; \
                     the spectral margin there is {m:.6e} and the derived onset is 1/11 (root of 33a^2 - 14a + 1)"
                ));
                notes.push(format!(
                    "discrepancy: printed crossover alpha = {PRINTED_FAMILY23_CROSSOVER}; exact value is 2/15"
                ));
            }
        }
        FamilyTag::Isotropic => {
            if let Some((i, best)) = out
                .rows
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.b1.total_cmp(&b.1.b1))
            {
                notes.push(format!(
                    "landmark: max b1 over grid = {:.12} at {} = {}",
                    best.b1, out.param_names[0], out.rows[i].params[0]
                ));
            }
            let spread = out
                .rows
                .iter()
                .map(|r| (r.b2 - 0.5).abs())
                .fold(0.0, f64::max);
            notes.push(format!(
                "discrepancy: b2 computes to 1/2 at every grid point (max deviation {spread:.3e}); \
                 the printed expression (4f^2 - 2f + 7)/18 does not match"
            ));
        }
        FamilyTag::Pps => {
            let t = pps_abs_sep_threshold();
            notes.push(format!(
                "landmark: spectral abs-sep holds exactly for eps <= {t:.10} (1/3)"
            ));
            notes.push(format!(
                "discrepancy: printed threshold eps = 1/33 = {PRINTED_PPS_THRESHOLD:.10} is stricter than the derived 1/3"
            ));
        }
        FamilyTag::ProductP => {
            notes.push(format!(
                "landmark: abs-sep onset p = {:.10}, classic-ball entry p = {:.10}",
                fig1_abs_sep_onset(),
                fig1_classic_entry()
            ));
        }
        _ => {}
    }
    Ok(notes)
}

pub fn scan_csv(out: &ScanOutput) -> String {
    let mut header: Vec<&str> = out.param_names.iter().map(String::as_str).collect();
    header.push("purity");
    header.extend(SCAN_CRITERIA.iter().map(|(_, h)| *h));
    header.extend(["b1", "b2", "classic", "summary"]);
    let mut s = header.join(",");
    s.push('\n');
    for r in &out.rows {
        let mut cells: Vec<String> = r.params.iter().map(f64::to_string).collect();
        cells.push(r.purity.to_string());
        cells.extend(r.margins.iter().map(f64::to_string));
        cells.extend([r.b1, r.b2, r.classic].iter().map(f64::to_string));
        cells.push(r.summary.as_str().to_string());
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

/// Convenience wrapper used by the 2 (x) 3 reproduction at gamma = 1/3.
pub fn family23_spectral_margin(alpha: f64, gamma: f64) -> Result<f64> {
    let rho = build_family23(alpha, gamma)?;
    Ok(abs_sep_from_spectrum(rho.spectrum()).margin)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r: ParamRange = "p=0:0.5:0.1".parse().unwrap();
        let pts = r.points();
        assert_eq!(pts.len(), 6);
        assert_eq!(*pts.last().unwrap(), 0.5);
        assert!("p=0:1".parse::<ParamRange>().is_err());
        assert!("p=1:0:0.1".parse::<ParamRange>().is_err());
        assert!("p=0:1:0".parse::<ParamRange>().is_err());
        assert!("0:1:0.1".parse::<ParamRange>().is_err());
    }

    #[test]
    fn table1_rows_agree() {
        for row in table1() {
            assert!(row.agrees(), "{row:?}");
        }
    }

    #[test]
    fn fig1_grid_and_columns() {
        let rows = fig1(11).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[10].p, 0.5);
        assert!(fig1(1).is_err());
        let csv = fig1_csv(&rows);
        assert!(csv.starts_with("p,purity,b1,b2,classic,abs_sep_flag\n"));
        assert_eq!(csv.lines().count(), 12);
    }

    #[test]
    fn landmarks() {
        assert!((pps_abs_sep_threshold() - 1.0 / 3.0).abs() < 1e-9);
        assert!((family23_crossover(1.0 / 3.0).unwrap() - 2.0 / 15.0).abs() < 1e-9);
        let (lo, hi) = family23_abs_sep_interval(1.0 / 3.0).unwrap().unwrap();
        assert!((lo - 1.0 / 11.0).abs() < 1e-9, "{lo}");
        assert!((hi - 1.0 / 6.0).abs() < 1e-6, "{hi}");
    }

    #[test]
    fn scan_rejects_domain_errors() {
        let r = ParamRange::new("f", 0.0, 1.5, 0.5).unwrap();
        assert!(scan(FamilyTag::Isotropic, &[r], &[]).is_err());
        let r = ParamRange::new("zzz", 0.0, 0.5, 0.5).unwrap();
        assert!(scan(FamilyTag::Isotropic, &[r], &[]).is_err());
    }

    #[test]
    fn two_dimensional_scan() {
        let ranges = [
            ParamRange::new("alpha", 0.0, 0.2, 0.1).unwrap(),
            ParamRange::new("gamma", 0.3, 0.4, 0.1).unwrap(),
        ];
        let out = scan(FamilyTag::Family23, &ranges, &[]).unwrap();
        assert_eq!(out.rows.len(), 6);
        let csv = scan_csv(&out);
        assert!(csv.starts_with("alpha,gamma,purity,"));
    }
}
