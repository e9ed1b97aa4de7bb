//! Per-instance evaluation: success probability, shots-to-solution (STS),
//! energy and AR expectation, plus the classical baselines.

use alloc::vec::Vec;

use crate::encoding::{AngleSchedule, AngleSource, DepthRule};
use crate::error::{Error, Result};
use crate::normalization::{rescale, NormKind};
use crate::qubo::QuboInstance;
use crate::simulator::{ar_from_energy, energy_expectation, run_qaoa_tracked, success_probability};
use crate::spectrum::{compute_spectrum, feasible_set, Spectrum};

/// A rescaled instance together with its cost table.
///
/// An all-zero instance cannot be rescaled; it is kept as is and marked
/// degenerate, which makes every bitstring feasible (P = 1, STS = 1).
#[derive(Debug, Clone)]
pub struct PreparedInstance {
    pub instance: QuboInstance,
    pub spectrum: Spectrum,
    pub degenerate: bool,
}

impl PreparedInstance {
    pub fn new(raw: &QuboInstance, norm: NormKind) -> Result<Self> {
        let instance = match rescale(raw, norm) {
            Ok(inst) => inst,
            Err(Error::ZeroInstance) => raw.clone(),
            Err(e) => return Err(e),
        };
        let spectrum = compute_spectrum(&instance)?;
        let degenerate = spectrum.is_degenerate();
        Ok(Self {
            instance,
            spectrum,
            degenerate,
        })
    }

    pub fn n(&self) -> usize {
        self.spectrum.n()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalRecord {
    pub n: usize,
    pub p: usize,
    pub seed: u64,
    pub alpha: f64,
    pub p_alpha: f64,
    /// `1 / p_alpha`, or `+inf` when `p_alpha == 0`.
    pub sts: f64,
    pub energy: f64,
    pub ar_expect: f64,
    pub feasible_count: usize,
    /// Largest `|norm^2 - 1|` after any layer of the simulation.
    pub norm_drift: f64,
    pub degenerate: bool,
}

pub fn sts_from_probability(p_alpha: f64) -> f64 {
    if p_alpha > 0.0 {
        1.0 / p_alpha
    } else {
        f64::INFINITY
    }
}

/// Rescales, enumerates, simulates and scores one instance.
pub fn evaluate_instance(
    instance: &QuboInstance,
    source: &AngleSource,
    alpha: f64,
    depth: DepthRule,
    norm: NormKind,
) -> Result<EvalRecord> {
    let prepared = PreparedInstance::new(instance, norm)?;
    let schedule = source.schedule(prepared.n(), depth);
    let mut records = evaluate_prepared(&prepared, &schedule, &[alpha])?;
    Ok(records.remove(0))
}

/// Simulates once and scores the output state at every `alpha`.
pub fn evaluate_prepared(
    prepared: &PreparedInstance,
    schedule: &AngleSchedule,
    alphas: &[f64],
) -> Result<Vec<EvalRecord>> {
    let feasible = alphas
        .iter()
        .map(|&a| feasible_set(&prepared.spectrum, a))
        .collect::<Result<Vec<_>>>()?;
    let (state, norm_drift) = run_qaoa_tracked(&prepared.spectrum, schedule)?;
    let energy = energy_expectation(&state, &prepared.spectrum)?;
    let ar_expect = ar_from_energy(energy, &prepared.spectrum);
    Ok(feasible
        .iter()
        .map(|fs| {
            let p_alpha = success_probability(&state, fs);
            EvalRecord {
                n: prepared.n(),
                p: schedule.p(),
                seed: prepared.instance.seed,
                alpha: fs.alpha,
                p_alpha,
                sts: sts_from_probability(p_alpha),
                energy,
                ar_expect,
                feasible_count: fs.len(),
                norm_drift,
                degenerate: prepared.degenerate,
            }
        })
        .collect())
}

/// Expected number of uniform random samples to hit `F(alpha)`:
/// `2^n / |F(alpha)|`.
pub fn brute_force_baseline(spectrum: &Spectrum, alpha: f64) -> Result<f64> {
    let fs = feasible_set(spectrum, alpha)?;
    Ok(spectrum.costs().len() as f64 / fs.len() as f64)
}

/// Unit-free time-to-solution model: `sts * n * p` (one layer costs `O(n)`).
pub fn tts_model(sts: f64, n: usize, p: usize) -> f64 {
    sts * n as f64 * p as f64
}
