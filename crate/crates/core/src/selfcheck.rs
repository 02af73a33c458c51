//! Seeded property suites over the whole library.

use std::fmt;

use rand::Rng;

use crate::criteria::{
    abs_sep_margin, ball_bounds, band_gap, block_coherence_margin, classify,
    entropy_gap_margin, ppt_verdict, Summary,
};
use crate::discord::{
    discord_pps, half_mixed_abs_sep_margin, zero_discord_purity_bound, zero_discord_thresholds,
};
use crate::matcore::{
    eigh, ginibre, haar_unitary_from, partial_trace, partial_transpose_b, purity, rng_from_seed,
    ComplexMatrix, Spectrum, Subsystem,
};
use crate::sampling::{
    diagonal_state, random_abs_sep_spectrum, random_density, random_probabilities,
    random_zd_params,
};
use crate::states::{
    build_family23, build_isotropic, build_pps, build_product_p, build_zero_discord,
    family23_admissible, from_block_form, maximally_mixed, sigma1, sigma24, singlet,
    to_block_form, varsigma24, BlochVector, DensityMatrix,
};

pub const DEFAULT_SEED: u64 = 20240901;

const IDENTITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(context());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selfcheck seed {}", self.seed)?;
        for s in &self.suites {
            let tag = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{tag}  {:<40} {:>6} checked {:>6} failed",
                s.name, s.checked, s.failed
            )?;
            if let Some(ctx) = &s.first_failure {
                writeln!(f, "      first failure: {ctx}")?;
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        write!(f, "{} of {} suites passed", self.suites.len() - failed, self.suites.len())
    }
}

/// Every builder at a spread of parameters, labelled.
pub fn builder_gallery() -> Vec<(String, DensityMatrix)> {
    let mut out = vec![("sigma1".to_string(), sigma1()), ("sigma24".to_string(), sigma24())];
    for d in 2..=4 {
        out.push((format!("maximally_mixed d={d}"), maximally_mixed(d).unwrap()));
    }
    for i in 0..=10 {
        let t = i as f64 / 10.0;
        out.push((format!("product_p p={t}"), build_product_p(t).unwrap()));
        out.push((format!("varsigma24 a={t}"), varsigma24(t).unwrap()));
        out.push((format!("pps eps={t}"), build_pps(t, &singlet()).unwrap()));
        out.push((format!("isotropic f={t}"), build_isotropic(t).unwrap()));
        let r = BlochVector::new([0.1, -0.2, 0.05 + 0.03 * t]).unwrap();
        out.push((
            format!("zero_discord p={t}"),
            build_zero_discord(t, 0.6, &BlochVector::along_z(0.3).unwrap(), &r).unwrap(),
        ));
    }
    for i in 0..=10 {
        for j in 0..=10 {
            let (a, g) = (0.05 * i as f64, 0.1 * j as f64);
            if family23_admissible(a, g) {
                out.push((format!("family23 alpha={a} gamma={g}"), build_family23(a, g).unwrap()));
            }
        }
    }
    out
}

fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(n, rng);
    (&g + &g.adjoint()).scale(0.5)
}

fn eigensolver_residual(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("eigensolver residual");
    let mut rng = rng_from_seed(seed);
    for k in 0..400 {
        let n = 1 + k % 8;
        let m = random_hermitian(n, &mut rng);
        let e = eigh(&m).expect("hermitian input");
        let res = (&m - &e.reconstruct()).frobenius_norm();
        let scale = m.frobenius_norm().max(1.0);
        s.check(res <= 1e-10 * scale, || format!("n={n} draw {k}: residual {res:e}"));
    }
    s
}

fn trace_consistency(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("spectrum sum, partial traces, PT involution");
    let mut rng = rng_from_seed(seed);
    for k in 0..300 {
        let d = 2 + k % 3;
        let rho = random_density(d, &mut rng);
        let m = rho.matrix();
        let sum = rho.spectrum().sum();
        let tr = m.trace().re;
        s.check((sum - tr).abs() <= IDENTITY_TOL, || {
            format!("d={d} draw {k}: eigenvalue sum {sum} vs trace {tr}")
        });
        for keep in [Subsystem::A, Subsystem::B] {
            let t = partial_trace(m, d, keep).trace().re;
            s.check((t - 1.0).abs() <= IDENTITY_TOL, || {
                format!("d={d} draw {k}: partial trace keeping {keep:?} has trace {t}")
            });
        }
        let twice = partial_transpose_b(&partial_transpose_b(m, d), d);
        s.check(&twice == m, || format!("d={d} draw {k}: partial transpose not an involution"));
    }
    s
}

fn builder_identities() -> SuiteResult {
    let mut s = SuiteResult::new("builders: block round trip, purity identity");
    for (name, rho) in builder_gallery() {
        let b = to_block_form(&rho);
        let back = from_block_form(&b).expect("reassembles");
        s.check(back.matrix() == rho.matrix(), || format!("{name}: block round trip changed the matrix"));
        let p = purity(rho.matrix());
        let blocks = b.tr_x2() + 2.0 * b.tr_yy() + b.tr_z2();
        s.check((p - blocks).abs() <= IDENTITY_TOL, || {
            format!("{name}: purity {p} vs block sum {blocks}")
        });
        let bb = ball_bounds(&b).expect("valid blocks");
        let pb = purity(&partial_trace(rho.matrix(), rho.d(), Subsystem::B));
        s.check((bb.b2 - pb).abs() <= IDENTITY_TOL, || {
            format!("{name}: b2 {} vs purity of reduced qudit {pb}", bb.b2)
        });
    }
    s
}

fn unitary_invariance(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("purity under Haar conjugation");
    let mut rng = rng_from_seed(seed);
    let base = sigma1();
    for k in 0..100 {
        let u = haar_unitary_from(4, &mut rng);
        let p = purity(&u.conjugate(base.matrix()));
        s.check((p - base.purity()).abs() <= IDENTITY_TOL, || {
            format!("sigma1 conjugation {k}: purity {p}")
        });
    }
    for k in 0..100 {
        let d = 2 + k % 3;
        let rho = random_density(d, &mut rng);
        let u = haar_unitary_from(2 * d, &mut rng);
        let p = purity(&u.conjugate(rho.matrix()));
        s.check((p - rho.purity()).abs() <= IDENTITY_TOL, || {
            format!("random 2x{d} state {k}: purity {p} vs {}", rho.purity())
        });
    }
    s
}

fn ball_ordering(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("b2 >= b1");
    let mut rng = rng_from_seed(seed);
    for k in 0..1000 {
        let d = 2 + k % 3;
        let b = to_block_form(&random_density(d, &mut rng));
        let bb = ball_bounds(&b).expect("valid blocks");
        s.check(bb.b2 >= bb.b1 - IDENTITY_TOL, || {
            format!("random 2x{d} block form {k}: b1 {} > b2 {}", bb.b1, bb.b2)
        });
    }
    for (name, rho) in builder_gallery() {
        let bb = ball_bounds(&rho.blocks()).expect("valid blocks");
        s.check(bb.b2 >= bb.b1 - IDENTITY_TOL, || format!("{name}: b1 {} > b2 {}", bb.b1, bb.b2));
    }
    s
}

fn necessary_conditions_imply_npt(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("block criteria violated => NPT (d <= 3)");
    let mut rng = rng_from_seed(seed);
    for d in [2, 3] {
        for k in 0..1000 {
            let rho = random_density(d, &mut rng);
            let b = rho.blocks();
            let coherence = block_coherence_margin(&b);
            let entropy = entropy_gap_margin(&b);
            if coherence.holds() && entropy.holds() {
                s.check(true, String::new);
                continue;
            }
            let ppt = ppt_verdict(&rho).expect("valid state");
            s.check(!ppt.holds(), || {
                format!(
                    "2x{d} draw {k}: coherence margin {:e}, entropy margin {:e}, but PT min eigenvalue {:e}",
                    coherence.margin, entropy.margin, ppt.margin
                )
            });
        }
    }
    s
}

fn abs_sep_orbits_are_ppt(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("abs-sep spectrum orbit stays PPT");
    let mut rng = rng_from_seed(seed);
    for d in [2, 3] {
        for k in 0..10 {
            let values = random_abs_sep_spectrum(d, &mut rng);
            let base = diagonal_state(&values, d);
            for j in 0..50 {
                let u = haar_unitary_from(2 * d, &mut rng);
                let rho = DensityMatrix::new(u.conjugate(base.matrix()), d).expect("unitary orbit");
                let ppt = ppt_verdict(&rho).expect("valid state");
                s.check(ppt.holds(), || {
                    format!(
                        "2x{d} spectrum {k} conjugation {j}: PT min eigenvalue {:e} for spectrum {values:?}",
                        ppt.margin
                    )
                });
            }
        }
    }
    s
}

fn band_gap_nonnegative(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("band gap >= 0");
    let mut rng = rng_from_seed(seed);
    for k in 0..10_000 {
        let d = 2 + k % 3;
        let spec = Spectrum::new(random_probabilities(2 * d, &mut rng), d).expect("simplex draw");
        let e = band_gap(&spec);
        s.check(e >= -1e-12, || format!("2x{d} spectrum {:?}: gap {e:e}", spec.values()));
    }
    s
}

fn summary_consistency() -> SuiteResult {
    let mut s = SuiteResult::new("summary consistency over builders");
    for (name, rho) in builder_gallery() {
        let r = classify(&rho, &name).expect("valid state");
        s.check(!r.contradiction, || format!("{name}: {}", r.notes.join("; ")));
        let abs = r
            .criterion(crate::criteria::Criterion::SpectralAbsSep)
            .is_some_and(|c| c.holds());
        s.check(!(abs && r.summary == Summary::Entangled), || {
            format!("{name}: abs-sep spectrum reported entangled")
        });
    }
    s
}

fn discord_monotone() -> SuiteResult {
    let mut s = SuiteResult::new("pps discord nonnegative and monotone");
    let n = 10_000;
    let mut prev = 0.0;
    for i in 0..=n {
        let eps = i as f64 / n as f64;
        let v = discord_pps(eps).expect("in domain");
        s.check(v >= 0.0 && v >= prev, || format!("eps = {eps}: {v:e} after {prev:e}"));
        prev = v;
    }
    s
}

fn threshold_bracketing() -> SuiteResult {
    let mut s = SuiteResult::new("zero-discord threshold bracketing");
    for r in [0.0, 0.1, 0.2, 0.3, 0.4, 0.5] {
        let t = zero_discord_thresholds(r).expect("in range");
        let Some(p_abs) = t.p_abs else {
            continue;
        };
        let m = half_mixed_abs_sep_margin(p_abs, r);
        s.check(m.abs() <= 1e-8, || format!("|r2| = {r}: margin {m:e} at p_abs {p_abs}"));
        for i in 0..100 {
            let p = p_abs + (0.5 - p_abs) * (i as f64 + 0.5) / 100.0;
            let m = abs_sep_margin(&crate::discord::half_mixed_spectrum(p, r)).expect("length 4");
            s.check(m >= -1e-10, || format!("|r2| = {r}: margin {m:e} at p = {p} above p_abs"));
        }
    }
    s
}

fn zero_discord_bound(seed: u64) -> SuiteResult {
    let mut s = SuiteResult::new("zero-discord purity <= min-form bound");
    let mut rng = rng_from_seed(seed);
    for k in 0..10_000 {
        let params = random_zd_params(&mut rng);
        let p = params.state().expect("in domain").purity();
        let bound = zero_discord_purity_bound(&params);
        s.check(p <= bound + 1e-10, || {
            format!(
                "draw {k}: p = {:.6}, |r1| = {:.6}, |r2| = {:.6}: purity {p:.6} exceeds bound {bound:.6}",
                params.p,
                params.r1.norm(),
                params.r2.norm()
            )
        });
    }
    s
}

/// Runs every suite; sub-seeds are derived from `seed` so suites are independent.
pub fn run_selfcheck(seed: u64) -> SelfcheckReport {
    let sub = |k: u64| seed.wrapping_add(k);
    SelfcheckReport {
        seed,
        suites: vec![
            eigensolver_residual(sub(1)),
            trace_consistency(sub(2)),
            builder_identities(),
            unitary_invariance(sub(3)),
            ball_ordering(sub(4)),
            necessary_conditions_imply_npt(sub(5)),
            abs_sep_orbits_are_ppt(sub(6)),
            band_gap_nonnegative(sub(7)),
            summary_consistency(),
            discord_monotone(),
            threshold_bracketing(),
            zero_discord_bound(sub(8)),
        ],
    }
}
