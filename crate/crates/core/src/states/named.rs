//! Fixed example states, built entry-by-entry from their rational forms.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::density::{BlochVector, DensityMatrix};
use super::families::{
    build_family23, build_isotropic, build_pps, build_product_p, build_zero_discord,
    maximally_mixed, singlet,
};
use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, Spectrum};

fn rat(p: i64, q: i64) -> f64 {
    p as f64 / q as f64
}

/// `diag(1/5, 4/5) (x) I/2`.
pub fn sigma1() -> DensityMatrix {
    let m = ComplexMatrix::from_diagonal(&[rat(1, 10), rat(1, 10), rat(2, 5), rat(2, 5)]);
    DensityMatrix::new(m, 2).expect("sigma1 is a valid state")
}

/// 2 (x) 4 state whose blocks violate Tr(XZ) >= Tr(YY^dagger) for every a in (0, 1].
pub fn varsigma24(a: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::domain(format!("a = {a} outside [0, 1]")));
    }
    let norm = 6.0 * a + 1.0;
    let v = a / norm;
    let mut m = ComplexMatrix::zeros(8);
    for i in [0, 1, 2, 5, 6] {
        m[(i, i)] = Complex64::new(v, 0.0);
    }
    m[(7, 7)] = Complex64::new((1.0 + a) / norm, 0.0);
    for (i, j) in [(0, 7), (1, 6), (2, 5)] {
        m[(i, j)] = Complex64::new(v, 0.0);
        m[(j, i)] = Complex64::new(v, 0.0);
    }
    DensityMatrix::new(m, 4)
}

/// 2 (x) 4 state with spectrum (97/648, 1/8 x6, 65/648).
pub fn sigma24() -> DensityMatrix {
    let mut m = ComplexMatrix::identity(8).scale(rat(1, 8));
    let c = Complex64::new(rat(1, 81), 0.0);
    for (i, j) in [(0, 4), (0, 7), (3, 4), (3, 7)] {
        m[(i, j)] = c;
        m[(j, i)] = c;
    }
    DensityMatrix::new(m, 4).expect("sigma24 is a valid state")
}

const HA24_NUMERATORS: [[i64; 8]; 8] = [
    [71, 0, 0, 7, 0, 0, 7, 0],
    [0, 39, 0, 0, 71, 0, 0, 23],
    [0, 0, 31, 0, 0, 31, 0, 0],
    [7, 0, 0, 39, 0, 0, 71, 0],
    [0, 39, 0, 0, 39, 0, 0, 23],
    [0, 0, 31, 0, 0, 31, 0, 0],
    [7, 0, 0, 39, 0, 0, 39, 0],
    [0, 23, 0, 0, 23, 0, 0, 111],
];

/// The 2 (x) 4 matrix exactly as tabulated (entries n/400). It is not Hermitian.
pub fn ha24_matrix() -> ComplexMatrix {
    ComplexMatrix::from_fn(8, |i, j| Complex64::new(rat(HA24_NUMERATORS[i][j], 400), 0.0))
}

/// Tabulated eigenvalues of the 2 (x) 4 example:
/// (189 +- sqrt(5321))/800, 17/80, 4/25, 31/200, 0, 0, 0.
pub fn ha24_published_spectrum() -> Spectrum {
    let r = 5321f64.sqrt();
    Spectrum::new(
        vec![
            (189.0 + r) / 800.0,
            rat(17, 80),
            rat(4, 25),
            rat(31, 200),
            (189.0 - r) / 800.0,
            0.0,
            0.0,
            0.0,
        ],
        4,
    )
    .expect("tabulated spectrum is a density spectrum")
}

/// A matrix that cannot be validated as a density matrix but carries a known spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct NonNormalState {
    pub matrix: ComplexMatrix,
    pub d: usize,
    pub published_spectrum: Spectrum,
    pub hermitian_deviation: f64,
}

impl NonNormalState {
    pub fn ha24() -> Self {
        let matrix = ha24_matrix();
        let hermitian_deviation = matrix.hermitian_deviation();
        Self {
            matrix,
            d: 4,
            published_spectrum: ha24_published_spectrum(),
            hermitian_deviation,
        }
    }

    /// Recognizes the tabulated ha24 matrix.
    pub fn recognize(matrix: &ComplexMatrix) -> Option<Self> {
        let ha = Self::ha24();
        (matrix.n() == 8 && matrix.approx_eq(&ha.matrix, 1e-12)).then_some(ha)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum NamedState {
    Valid(DensityMatrix),
    NonNormal(NonNormalState),
}

impl NamedState {
    pub fn density(&self) -> Option<&DensityMatrix> {
        match self {
            NamedState::Valid(rho) => Some(rho),
            NamedState::NonNormal(_) => None,
        }
    }

    pub fn into_density(self) -> Option<DensityMatrix> {
        match self {
            NamedState::Valid(rho) => Some(rho),
            NamedState::NonNormal(_) => None,
        }
    }
}

/// Every state family that can be built by name.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Sigma1,
    ProductP { p: f64 },
    Varsigma24 { a: f64 },
    Sigma24,
    Ha24,
    /// Singlet pseudo-pure state.
    Pps { eps: f64 },
    /// Zero-discord state with both Bloch vectors along z.
    ZeroDiscord { p: f64, alpha: f64, r1: f64, r2: f64 },
    Isotropic { f: f64 },
    Family23 { alpha: f64, gamma: f64 },
    MaximallyMixed { d: usize },
}

/// Family tags accepted by [`FamilySpec::from_params`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyTag {
    Sigma1,
    ProductP,
    Varsigma24,
    Sigma24,
    Ha24,
    Pps,
    ZeroDiscord,
    Isotropic,
    Family23,
    MaximallyMixed,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::Sigma1,
        FamilyTag::ProductP,
        FamilyTag::Varsigma24,
        FamilyTag::Sigma24,
        FamilyTag::Ha24,
        FamilyTag::Pps,
        FamilyTag::ZeroDiscord,
        FamilyTag::Isotropic,
        FamilyTag::Family23,
        FamilyTag::MaximallyMixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Sigma1 => "sigma1",
            FamilyTag::ProductP => "product_p",
            FamilyTag::Varsigma24 => "varsigma24",
            FamilyTag::Sigma24 => "sigma24",
            FamilyTag::Ha24 => "ha24",
            FamilyTag::Pps => "pps",
            FamilyTag::ZeroDiscord => "zero_discord",
            FamilyTag::Isotropic => "isotropic",
            FamilyTag::Family23 => "family23",
            FamilyTag::MaximallyMixed => "maximally_mixed",
        }
    }

    /// Parameter names with their defaults.
    pub fn parameters(self) -> &'static [(&'static str, f64)] {
        match self {
            FamilyTag::Sigma1 | FamilyTag::Sigma24 | FamilyTag::Ha24 => &[],
            FamilyTag::ProductP => &[("p", 0.5)],
            FamilyTag::Varsigma24 => &[("a", 1.0)],
            FamilyTag::Pps => &[("eps", 0.0)],
            FamilyTag::ZeroDiscord => &[("p", 0.5), ("alpha", 1.0), ("r1", 0.0), ("r2", 0.0)],
            FamilyTag::Isotropic => &[("f", 0.0)],
            FamilyTag::Family23 => &[("alpha", 0.0), ("gamma", 1.0 / 3.0)],
            FamilyTag::MaximallyMixed => &[("d", 2.0)],
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = FamilyTag::ALL.iter().map(|t| t.name()).collect();
                Error::domain(format!("unknown family '{s}' (known: {})", known.join(", ")))
            })
    }
}

impl FamilySpec {
    /// Builds a spec from a tag and named parameters; missing parameters take their defaults.
    pub fn from_params(tag: FamilyTag, params: &[(String, f64)]) -> Result<Self> {
        let known = tag.parameters();
        for (name, _) in params {
            if !known.iter().any(|(k, _)| k == name) {
                return Err(Error::domain(format!(
                    "family {tag} has no parameter '{name}'"
                )));
            }
        }
        let get = |name: &str| -> f64 {
            params
                .iter()
                .rev()
                .find(|(k, _)| k == name)
                .map(|(_, v)| *v)
                .or_else(|| known.iter().find(|(k, _)| *k == name).map(|(_, v)| *v))
                .expect("parameter listed for tag")
        };
        Ok(match tag {
            FamilyTag::Sigma1 => FamilySpec::Sigma1,
            FamilyTag::ProductP => FamilySpec::ProductP { p: get("p") },
            FamilyTag::Varsigma24 => FamilySpec::Varsigma24 { a: get("a") },
            FamilyTag::Sigma24 => FamilySpec::Sigma24,
            FamilyTag::Ha24 => FamilySpec::Ha24,
            FamilyTag::Pps => FamilySpec::Pps { eps: get("eps") },
            FamilyTag::ZeroDiscord => FamilySpec::ZeroDiscord {
                p: get("p"),
                alpha: get("alpha"),
                r1: get("r1"),
                r2: get("r2"),
            },
            FamilyTag::Isotropic => FamilySpec::Isotropic { f: get("f") },
            FamilyTag::Family23 => FamilySpec::Family23 {
                alpha: get("alpha"),
                gamma: get("gamma"),
            },
            FamilyTag::MaximallyMixed => {
                let d = get("d");
                if d.fract() != 0.0 || d < 2.0 {
                    return Err(Error::domain(format!("d = {d} must be an integer >= 2")));
                }
                FamilySpec::MaximallyMixed { d: d as usize }
            }
        })
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilySpec::Sigma1 => FamilyTag::Sigma1,
            FamilySpec::ProductP { .. } => FamilyTag::ProductP,
            FamilySpec::Varsigma24 { .. } => FamilyTag::Varsigma24,
            FamilySpec::Sigma24 => FamilyTag::Sigma24,
            FamilySpec::Ha24 => FamilyTag::Ha24,
            FamilySpec::Pps { .. } => FamilyTag::Pps,
            FamilySpec::ZeroDiscord { .. } => FamilyTag::ZeroDiscord,
            FamilySpec::Isotropic { .. } => FamilyTag::Isotropic,
            FamilySpec::Family23 { .. } => FamilyTag::Family23,
            FamilySpec::MaximallyMixed { .. } => FamilyTag::MaximallyMixed,
        }
    }

    pub fn build(&self) -> Result<NamedState> {
        let valid = |r: Result<DensityMatrix>| r.map(NamedState::Valid);
        match *self {
            FamilySpec::Sigma1 => Ok(NamedState::Valid(sigma1())),
            FamilySpec::ProductP { p } => valid(build_product_p(p)),
            FamilySpec::Varsigma24 { a } => valid(varsigma24(a)),
            FamilySpec::Sigma24 => Ok(NamedState::Valid(sigma24())),
            FamilySpec::Ha24 => Ok(NamedState::NonNormal(NonNormalState::ha24())),
            FamilySpec::Pps { eps } => valid(build_pps(eps, &singlet())),
            FamilySpec::ZeroDiscord { p, alpha, r1, r2 } => valid(build_zero_discord(
                p,
                alpha,
                &BlochVector::along_z(r1)?,
                &BlochVector::along_z(r2)?,
            )),
            FamilySpec::Isotropic { f } => valid(build_isotropic(f)),
            FamilySpec::Family23 { alpha, gamma } => valid(build_family23(alpha, gamma)),
            FamilySpec::MaximallyMixed { d } => valid(maximally_mixed(d)),
        }
    }
}

/// Builds one of the fixed examples by name: sigma1, product_p, varsigma24, sigma24, ha24.
pub fn build_named(name: &str, params: &[(String, f64)]) -> Result<NamedState> {
    let tag: FamilyTag = name.parse()?;
    match tag {
        FamilyTag::Sigma1
        | FamilyTag::ProductP
        | FamilyTag::Varsigma24
        | FamilyTag::Sigma24
        | FamilyTag::Ha24 => FamilySpec::from_params(tag, params)?.build(),
        other => Err(Error::domain(format!(
            "'{other}' is a parameterized family, not a named example"
        ))),
    }
}
