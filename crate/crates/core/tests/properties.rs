use proptest::prelude::*;

use sepball::criteria::{abs_sep_margin, ball_bounds, classify, Summary};
use sepball::discord::{zero_discord_purity_max, ZdParams};
use sepball::matcore::{
    eigh, ginibre, haar_unitary, partial_trace, partial_transpose_b, purity, rng_from_seed,
    ComplexMatrix, Spectrum, Subsystem,
};
use sepball::report::ClassificationReport;
use sepball::sampling::{random_density, random_probabilities};
use sepball::statefile::{parse_state, write_state};
use sepball::states::{from_block_form, to_block_form, BlochVector};

fn bloch() -> impl Strategy<Value = BlochVector> {
    (0.0..=0.5f64, 0.0..std::f64::consts::PI, 0.0..std::f64::consts::TAU).prop_map(
        |(r, theta, phi)| {
            let r = r * 0.999_999;
            BlochVector::new([
                r * theta.sin() * phi.cos(),
                r * theta.sin() * phi.sin(),
                r * theta.cos(),
            ])
            .unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigh_reconstructs(seed in any::<u64>(), n in 1usize..=8) {
        let g = ginibre(n, &mut rng_from_seed(seed));
        let m = (&g + &g.adjoint()).scale(0.5);
        let e = eigh(&m).unwrap();
        let res = (&m - &e.reconstruct()).frobenius_norm();
        prop_assert!(res <= 1e-10 * m.frobenius_norm().max(1.0));
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn state_invariants(seed in any::<u64>(), d in 2usize..=4) {
        let rho = random_density(d, &mut rng_from_seed(seed));
        let m = rho.matrix();
        prop_assert_eq!(&partial_transpose_b(&partial_transpose_b(m, d), d), m);
        for keep in [Subsystem::A, Subsystem::B] {
            prop_assert!((partial_trace(m, d, keep).trace().re - 1.0).abs() <= 1e-10);
        }
        prop_assert!((rho.spectrum().sum() - 1.0).abs() <= 1e-10);

        let b = to_block_form(&rho);
        let back = from_block_form(&b).unwrap();
        prop_assert_eq!(back.matrix(), m);
        let blocks = b.tr_x2() + 2.0 * b.tr_yy() + b.tr_z2();
        prop_assert!((purity(m) - blocks).abs() <= 1e-10);

        let bb = ball_bounds(&b).unwrap();
        prop_assert!(bb.b2 >= bb.b1 - 1e-10);
        let rho_b = partial_trace(m, d, Subsystem::B);
        prop_assert!((bb.b2 - purity(&rho_b)).abs() <= 1e-10);
    }

    #[test]
    fn purity_is_unitarily_invariant(seed in any::<u64>(), d in 2usize..=3) {
        let rho = random_density(d, &mut rng_from_seed(seed));
        let u = haar_unitary(2 * d, seed ^ 0x5eed);
        prop_assert!(u.unitarity_defect() <= 1e-10);
        prop_assert!((purity(&u.conjugate(rho.matrix())) - rho.purity()).abs() <= 1e-10);
    }

    #[test]
    fn abs_sep_is_never_entangled(seed in any::<u64>(), d in 2usize..=3) {
        let rho = random_density(d, &mut rng_from_seed(seed));
        let r = classify(&rho, "random").unwrap();
        prop_assert!(!r.contradiction, "{:?}", r.notes);
        if r.summary == Summary::AbsSep {
            prop_assert!(r.criteria.iter().all(|c| c.holds() || c.name == sepball::Criterion::BlockNorm));
        }
    }

    #[test]
    fn spectral_margin_ignores_order(seed in any::<u64>(), d in 2usize..=4) {
        let mut v = random_probabilities(2 * d, &mut rng_from_seed(seed));
        let sorted = Spectrum::new(v.clone(), d).unwrap();
        let a = sepball::criteria::abs_sep_from_spectrum(&sorted).margin;
        v.reverse();
        prop_assert_eq!(abs_sep_margin(&v).unwrap(), a);
    }

    #[test]
    fn zero_discord_purity_below_larger_factor_purity(
        p in 0.0..=1.0f64,
        alpha in -1.0..=1.0f64,
        r1 in bloch(),
        r2 in bloch(),
    ) {
        let params = ZdParams::new(p, alpha, r1, r2).unwrap();
        let rho = params.state().unwrap();
        prop_assert!(rho.purity() <= zero_discord_purity_max(&params) + 1e-10);
        let want = p * p * (0.5 + 2.0 * r1.norm().powi(2))
            + (1.0 - p).powi(2) * (0.5 + 2.0 * r2.norm().powi(2));
        prop_assert!((rho.purity() - want).abs() <= 1e-12);
    }

    #[test]
    fn state_file_round_trips(seed in any::<u64>(), d in 2usize..=4) {
        let rho = random_density(d, &mut rng_from_seed(seed));
        let text = write_state(rho.matrix(), d, false);
        let parsed = parse_state(&text, "p").unwrap();
        prop_assert_eq!(parsed.d, d);
        prop_assert_eq!(&parsed.matrix, rho.matrix());
    }

    #[test]
    fn report_json_round_trips(seed in any::<u64>(), d in 2usize..=4) {
        let rho = random_density(d, &mut rng_from_seed(seed));
        let r = classify(&rho, "random").unwrap();
        prop_assert_eq!(ClassificationReport::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn identity_matrix_round_trips_through_file() {
    let m = ComplexMatrix::identity(6).scale(1.0 / 6.0);
    let parsed = parse_state(&write_state(&m, 3, false), "id").unwrap();
    assert_eq!(parsed.matrix, m);
}
