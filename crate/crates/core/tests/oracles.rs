mod common;

use common::{dense_qaoa, naive_costs};
use fpqaoa_core::qubo::spins_of_index;
use fpqaoa_core::rng::Stream;
use fpqaoa_core::{
    compute_spectrum, decode_sincos, energy_expectation, feasible_set, generate_mixed,
    generate_normal, prepare_plus, rescale, run_qaoa, success_probability, AngleSchedule, NormKind,
    QuboInstance,
};

fn random_schedule(stream: &mut Stream, p: usize) -> AngleSchedule {
    let gamma = (0..p).map(|_| stream.uniform_in(-3.0, 3.0)).collect();
    let beta = (0..p).map(|_| stream.uniform_in(-3.0, 3.0)).collect();
    AngleSchedule::new(gamma, beta).unwrap()
}

#[test]
fn kernel_matches_dense_products() {
    let mut stream = Stream::new(11);
    let mut worst: f64 = 0.0;
    for trial in 0..60u64 {
        let n = 1 + (trial % 5) as usize;
        let p = 1 + (trial % 7) as usize;
        let inst = if trial % 2 == 0 {
            generate_normal(n, trial).unwrap()
        } else {
            generate_mixed(n, trial).unwrap()
        };
        let spectrum = compute_spectrum(&inst).unwrap();
        let schedule = random_schedule(&mut stream, p);
        let fast = run_qaoa(&spectrum, &schedule).unwrap();
        let slow = dense_qaoa(&naive_costs(&inst), n, &schedule);
        for (a, b) in fast.amplitudes().iter().zip(&slow) {
            worst = worst.max((a - b).norm_sqr().sqrt());
        }
    }
    assert!(worst < 1e-10, "max amplitude error {worst:e}");
}

#[test]
fn spectrum_matches_term_by_term_costs() {
    for seed in 0..20 {
        let inst = generate_normal(7, seed).unwrap();
        let spectrum = compute_spectrum(&inst).unwrap();
        let naive = naive_costs(&inst);
        for (b, (&c, &d)) in spectrum.costs().iter().zip(&naive).enumerate() {
            assert!((c - d).abs() < 1e-12);
            let z = spins_of_index(b as u64, 7);
            assert!((inst.cost_evaluate(&z).unwrap() - d).abs() < 1e-12);
        }
        let min = naive.iter().copied().fold(f64::INFINITY, f64::min);
        let argmin: Vec<usize> = (0..naive.len()).filter(|&b| naive[b] == min).collect();
        assert_eq!(spectrum.argmin(), &argmin[..]);
    }
}

#[test]
fn feasible_set_matches_brute_force_threshold() {
    for seed in 0..20 {
        let inst = generate_mixed(6, seed).unwrap();
        let spectrum = compute_spectrum(&inst).unwrap();
        let naive = naive_costs(&inst);
        let lo = naive.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = naive.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        for alpha in [0.0, 0.5, 0.9, 0.95, 0.99] {
            let t = lo + (1.0 - alpha) * (hi - lo);
            let fs = feasible_set(&spectrum, alpha).unwrap();
            let expect: Vec<usize> = (0..naive.len()).filter(|&b| naive[b] <= t + 1e-9).collect();
            assert_eq!(fs.members(), &expect[..], "seed {seed} alpha {alpha}");
        }
        assert_eq!(
            feasible_set(&spectrum, 1.0).unwrap().members(),
            spectrum.argmin()
        );
        assert_eq!(feasible_set(&spectrum, 0.0).unwrap().len(), 64);
    }
}

#[test]
fn trace_of_cost_squared_is_frobenius() {
    for kind in 0..2 {
        for seed in 0..30u64 {
            let n = 3 + (seed % 8) as usize;
            let inst = if kind == 0 {
                generate_normal(n, seed).unwrap()
            } else {
                generate_mixed(n, seed).unwrap()
            };
            let spectrum = compute_spectrum(&inst).unwrap();
            let mean_sq =
                spectrum.costs().iter().map(|c| c * c).sum::<f64>() / spectrum.costs().len() as f64;
            let fro = inst
                .coefficients()
                .iter()
                .map(|s| s * s)
                .sum::<f64>()
                .sqrt();
            assert!((mean_sq.sqrt() - fro).abs() <= 1e-9 * fro);
        }
    }
}

#[test]
fn zero_angles_give_uniform_sampling() {
    for seed in 0..20 {
        let inst = rescale(&generate_normal(8, seed).unwrap(), NormKind::Frobenius).unwrap();
        let spectrum = compute_spectrum(&inst).unwrap();
        let fs = feasible_set(&spectrum, 0.95).unwrap();
        let state = run_qaoa(&spectrum, &decode_sincos(0.0, 0.0, 8)).unwrap();
        let p = success_probability(&state, &fs);
        assert!((1.0 / p - 256.0 / fs.len() as f64).abs() < 1e-12 * (256.0 / fs.len() as f64));
        let mean = spectrum.costs().iter().sum::<f64>() / 256.0;
        assert!((energy_expectation(&state, &spectrum).unwrap() - mean).abs() < 1e-12);
    }
}

#[test]
fn single_qubit_closed_form() {
    // C(z) = h z on one qubit
    let h = 0.7;
    let inst = QuboInstance::from_entries(1, [(0, 0, h)]).unwrap();
    let spectrum = compute_spectrum(&inst).unwrap();
    let (g, b) = (0.4, 0.3);
    let state = run_qaoa(&spectrum, &AngleSchedule::new(vec![g], vec![b]).unwrap()).unwrap();
    // P(z = -1) = 1/2 - sin(2 beta) sin(2 gamma h) / 2
    let p_minus = 0.5 - 0.5 * (2.0 * b).sin() * (2.0 * g * h).sin();
    assert!((state.probability(1) - p_minus).abs() < 1e-14);
    let plus = prepare_plus(1).unwrap();
    assert!((plus.probability(0) - 0.5).abs() < 1e-15);
}
