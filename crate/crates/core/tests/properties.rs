mod common;

use fpqaoa_core::stats::{percentile, sorted};
use fpqaoa_core::{
    compute_spectrum, decode, feasible_set, norm_value, rescale, run_qaoa, success_probability,
    AngleSchedule, FourierParams, NormKind, QuboInstance,
};
use proptest::prelude::*;

fn instance(n_max: usize, linear: bool) -> impl Strategy<Value = QuboInstance> {
    (1..=n_max).prop_flat_map(move |n| {
        proptest::collection::vec(-3.0f64..3.0, n * (n + 1) / 2).prop_map(move |vals| {
            let mut inst = QuboInstance::zeros(n).unwrap();
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in i..n {
                    let v = it.next().unwrap();
                    inst.set(i, j, if i == j && !linear { 0.0 } else { v })
                        .unwrap();
                }
            }
            inst
        })
    })
}

fn schedule(p_max: usize) -> impl Strategy<Value = AngleSchedule> {
    (1..=p_max).prop_flat_map(|p| {
        (
            proptest::collection::vec(-2.0f64..2.0, p),
            proptest::collection::vec(-2.0f64..2.0, p),
        )
            .prop_map(|(g, b)| AngleSchedule::new(g, b).unwrap())
    })
}

fn nonzero(inst: &QuboInstance) -> bool {
    inst.coefficients().iter().any(|&c| c.abs() > 1e-6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_cost_matches_term_sum(inst in instance(8, true)) {
        let spectrum = compute_spectrum(&inst).unwrap();
        for (b, &c) in spectrum.costs().iter().enumerate() {
            prop_assert!((c - common::naive_cost(&inst, b)).abs() < 1e-12);
        }
    }

    #[test]
    fn rescaling_keeps_argmin(inst in instance(7, true), kind in 1usize..4) {
        prop_assume!(nonzero(&inst));
        let kind = NormKind::ALL[kind];
        let scaled = rescale(&inst, kind).unwrap();
        let a = compute_spectrum(&inst).unwrap();
        let b = compute_spectrum(&scaled).unwrap();
        prop_assert_eq!(a.argmin(), b.argmin());
    }

    #[test]
    fn maxabs_bounded_by_frobenius(inst in instance(8, true)) {
        prop_assume!(nonzero(&inst));
        let m = norm_value(&inst, NormKind::MaxAbs).unwrap();
        let f = norm_value(&inst, NormKind::Frobenius).unwrap();
        prop_assert!(m <= f * (1.0 + 1e-15));
    }

    #[test]
    fn global_flip_symmetry_without_linear_terms(inst in instance(7, false)) {
        let spectrum = compute_spectrum(&inst).unwrap();
        let mask = (1usize << inst.n()) - 1;
        for (b, &c) in spectrum.costs().iter().enumerate() {
            prop_assert!((c - spectrum.costs()[b ^ mask]).abs() < 1e-12);
        }
    }

    #[test]
    fn feasible_sets_shrink_with_alpha(inst in instance(7, true), a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let spectrum = compute_spectrum(&inst).unwrap();
        let wide = feasible_set(&spectrum, lo).unwrap();
        let narrow = feasible_set(&spectrum, hi).unwrap();
        prop_assert!(!narrow.is_empty());
        prop_assert!(narrow.members().iter().all(|&z| wide.contains(z)));
        let best = feasible_set(&spectrum, 1.0).unwrap();
        prop_assert!(best.members().iter().all(|&z| narrow.contains(z)));
    }

    #[test]
    fn evolution_is_unitary(inst in instance(7, true), sched in schedule(8)) {
        let spectrum = compute_spectrum(&inst).unwrap();
        let state = run_qaoa(&spectrum, &sched).unwrap();
        prop_assert!((state.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scaling_costs_and_inverse_scaling_gamma_commute(
        inst in instance(6, true),
        sched in schedule(6),
        c in 0.2f64..5.0,
    ) {
        prop_assume!(nonzero(&inst));
        let s1 = compute_spectrum(&inst).unwrap();
        let s2 = compute_spectrum(&inst.scaled(c)).unwrap();
        let g: Vec<f64> = sched.gamma().iter().map(|g| g / c).collect();
        let sched2 = AngleSchedule::new(g, sched.beta().to_vec()).unwrap();
        let a = run_qaoa(&s1, &sched).unwrap();
        let b = run_qaoa(&s2, &sched2).unwrap();
        let fa = feasible_set(&s1, 0.9).unwrap();
        let fb = feasible_set(&s2, 0.9).unwrap();
        prop_assert_eq!(fa.members(), fb.members());
        prop_assert!((success_probability(&a, &fa) - success_probability(&b, &fb)).abs() < 1e-9);
    }

    #[test]
    fn frobenius_rescaling_is_scale_free(inst in instance(6, true), c in 0.01f64..100.0) {
        prop_assume!(nonzero(&inst));
        let a = rescale(&inst, NormKind::Frobenius).unwrap();
        let b = rescale(&inst.scaled(c), NormKind::Frobenius).unwrap();
        for (x, y) in a.coefficients().iter().zip(b.coefficients()) {
            prop_assert!((x - y).abs() < 1e-12);
        }
        prop_assert!((norm_value(&a, NormKind::Frobenius).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn decoding_is_linear(
        u1 in proptest::collection::vec(-4.0f64..4.0, 3),
        v1 in proptest::collection::vec(-4.0f64..4.0, 3),
        u2 in proptest::collection::vec(-4.0f64..4.0, 3),
        v2 in proptest::collection::vec(-4.0f64..4.0, 3),
        k in -3.0f64..3.0,
        p in 1usize..20,
    ) {
        let a = FourierParams::new(u1.clone(), v1.clone()).unwrap();
        let b = FourierParams::new(u2.clone(), v2.clone()).unwrap();
        let sum = FourierParams::new(
            u1.iter().zip(&u2).map(|(x, y)| x + y).collect(),
            v1.iter().zip(&v2).map(|(x, y)| x + y).collect(),
        ).unwrap();
        let (da, db, ds) = (decode(&a, p), decode(&b, p), decode(&sum, p));
        let dk = decode(&a.scaled(k), p);
        for i in 0..p {
            prop_assert!((ds.gamma()[i] - da.gamma()[i] - db.gamma()[i]).abs() < 1e-12);
            prop_assert!((ds.beta()[i] - da.beta()[i] - db.beta()[i]).abs() < 1e-12);
            prop_assert!((dk.gamma()[i] - k * da.gamma()[i]).abs() < 1e-12);
            prop_assert!((dk.beta()[i] - k * da.beta()[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn sincos_envelopes_are_monotone(u in 0.01f64..4.0, v in -4.0f64..-0.01, p in 2usize..30) {
        let s = decode(&FourierParams::sincos(u, v), p);
        for i in 1..p {
            prop_assert!(s.gamma()[i] > s.gamma()[i - 1]);
            prop_assert!(s.beta()[i] > s.beta()[i - 1]);
            prop_assert!(s.gamma()[i] > 0.0 && s.beta()[i] < 0.0);
        }
    }

    #[test]
    fn percentiles_are_ordered(values in proptest::collection::vec(-1e3f64..1e3, 1..50), a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let s = sorted(&values);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (x, y) = (percentile(&s, lo), percentile(&s, hi));
        prop_assert!(x <= y);
        prop_assert!(s[0] <= x && y <= s[s.len() - 1]);
    }
}
