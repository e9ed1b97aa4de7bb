//! Benchmark suites: STS percentiles per problem size, ablations, alpha
//! sweeps and normalization comparisons.
//!
//! Every suite draws its test instances from `seeds::test_ensemble(base_seed, n)`,
//! so arms that share `base_seed` see identical matrices.

use fpqaoa_core::encoding::{AngleSource, DepthRule};
use fpqaoa_core::metrics::{evaluate_prepared, EvalRecord, PreparedInstance};
use fpqaoa_core::qubo::{EnsembleKind, EnsembleSpec};
use fpqaoa_core::stats::{percentile, sorted, SummaryRow};
use fpqaoa_core::training::TrainConfig;
use fpqaoa_core::{NormKind, TrainResult, ENUMERATION_LIMIT};

use crate::trainer::train_ensemble;
use crate::{seeds, Error, Pool, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub source: AngleSource,
    pub alpha: f64,
    pub n_range: Vec<usize>,
    pub count: usize,
    pub kind: EnsembleKind,
    pub norm: NormKind,
    pub depth: DepthRule,
    pub base_seed: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_range.is_empty() {
            return Err(Error::Config("size range is empty".into()));
        }
        if let Some(&n) = self
            .n_range
            .iter()
            .find(|&&n| n == 0 || n > ENUMERATION_LIMIT)
        {
            return Err(Error::Config(format!(
                "size {n} outside 1..={ENUMERATION_LIMIT}"
            )));
        }
        if self.count == 0 {
            return Err(Error::Config("instance count must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(fpqaoa_core::Error::AlphaOutOfRange(self.alpha).into());
        }
        if self.kind == EnsembleKind::Custom {
            return Err(Error::Config("suites need a generated ensemble".into()));
        }
        if let DepthRule::Fixed(0) = self.depth {
            return Err(Error::Config("fixed depth must be at least 1".into()));
        }
        Ok(())
    }

    pub fn ensemble(&self, n: usize) -> EnsembleSpec {
        EnsembleSpec {
            kind: self.kind,
            n,
            count: self.count,
            base_seed: seeds::test_ensemble(self.base_seed, n),
            normalization: self.norm,
        }
    }

    /// Names of the fields that differ from `other`.
    pub fn diff(&self, other: &RunConfig) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.source != other.source {
            out.push("source");
        }
        if self.alpha != other.alpha {
            out.push("alpha");
        }
        if self.n_range != other.n_range {
            out.push("n_range");
        }
        if self.count != other.count {
            out.push("count");
        }
        if self.kind != other.kind {
            out.push("kind");
        }
        if self.norm != other.norm {
            out.push("norm");
        }
        if self.depth != other.depth {
            out.push("depth");
        }
        if self.base_seed != other.base_seed {
            out.push("base_seed");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutput {
    pub alpha: f64,
    pub rows: Vec<SummaryRow>,
    /// Per-size records in instance order, aligned with `rows`.
    pub records: Vec<Vec<EvalRecord>>,
}

impl SuiteOutput {
    pub fn row(&self, n: usize) -> Option<&SummaryRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Median uniform-sampling STS `2^n / |F(alpha)|` per size.
    pub fn brute_force_medians(&self) -> Vec<(usize, f64)> {
        self.records
            .iter()
            .zip(&self.rows)
            .map(|(recs, row)| {
                let size = (1u64 << row.n) as f64;
                let v: Vec<f64> = recs
                    .iter()
                    .map(|r| size / r.feasible_count as f64)
                    .collect();
                (row.n, percentile(&sorted(&v), 0.5))
            })
            .collect()
    }

    /// Largest post-layer norm deviation over every simulation in the suite.
    pub fn max_norm_drift(&self) -> f64 {
        self.records
            .iter()
            .flatten()
            .fold(0.0, |m, r| m.max(r.norm_drift))
    }
}

/// Evaluates the configured instances once per size and scores the states at
/// every `alpha` in `alphas`. Output `i` corresponds to `alphas[i]`.
pub fn run_suite_multi(cfg: &RunConfig, alphas: &[f64], pool: &Pool) -> Result<Vec<SuiteOutput>> {
    cfg.validate()?;
    if let Some(&a) = alphas.iter().find(|a| !(0.0..=1.0).contains(*a)) {
        return Err(fpqaoa_core::Error::AlphaOutOfRange(a).into());
    }
    let mut outputs: Vec<SuiteOutput> = alphas
        .iter()
        .map(|&alpha| SuiteOutput {
            alpha,
            rows: Vec::new(),
            records: Vec::new(),
        })
        .collect();
    for &n in &cfg.n_range {
        let spec = cfg.ensemble(n);
        let schedule = cfg.source.schedule(n, cfg.depth);
        let per_instance = pool.try_map(spec.count, |k| {
            let raw = spec.instance(k)?;
            let attach = |source| Error::Instance {
                n,
                seed: raw.seed,
                source,
            };
            let prepared = PreparedInstance::new(&raw, cfg.norm).map_err(attach)?;
            evaluate_prepared(&prepared, &schedule, alphas).map_err(attach)
        })?;
        for (a, out) in outputs.iter_mut().enumerate() {
            let recs: Vec<EvalRecord> = per_instance.iter().map(|r| r[a].clone()).collect();
            out.rows.push(SummaryRow::from_records(n, &recs));
            out.records.push(recs);
        }
    }
    Ok(outputs)
}

pub fn run_suite(cfg: &RunConfig, pool: &Pool) -> Result<SuiteOutput> {
    Ok(run_suite_multi(cfg, &[cfg.alpha], pool)?.remove(0))
}

/// Curves for several `alpha` on one shared instance set.
pub fn alpha_sweep(cfg: &RunConfig, alphas: &[f64], pool: &Pool) -> Result<Vec<SuiteOutput>> {
    run_suite_multi(cfg, alphas, pool)
}

/// Removal of one of the three modifications.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ablation {
    /// Exact optimum only: `alpha = 1`.
    NoM1,
    /// Depth fixed at 8 instead of `p = n`.
    NoM2,
    /// Max-abs instead of Frobenius rescaling.
    NoM3,
}

impl Ablation {
    pub const FIXED_DEPTH: usize = 8;

    pub fn as_str(self) -> &'static str {
        match self {
            Ablation::NoM1 => "no-m1",
            Ablation::NoM2 => "no-m2",
            Ablation::NoM3 => "no-m3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Ablation::NoM1, Ablation::NoM2, Ablation::NoM3]
            .into_iter()
            .find(|a| a.as_str() == s)
    }
}

/// The base run with exactly one field changed.
pub fn ablated_run(base: &RunConfig, which: Ablation) -> RunConfig {
    let mut cfg = base.clone();
    match which {
        Ablation::NoM1 => cfg.alpha = 1.0,
        Ablation::NoM2 => cfg.depth = DepthRule::Fixed(Ablation::FIXED_DEPTH),
        Ablation::NoM3 => cfg.norm = NormKind::MaxAbs,
    }
    cfg
}

pub fn ablated_train(base: &TrainConfig, which: Ablation) -> TrainConfig {
    let mut cfg = base.clone();
    match which {
        Ablation::NoM1 => cfg.alpha = 1.0,
        Ablation::NoM2 => cfg.depth = DepthRule::Fixed(Ablation::FIXED_DEPTH),
        Ablation::NoM3 => cfg.norm = NormKind::MaxAbs,
    }
    cfg
}

/// Where an arm gets its fixed parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamProvenance {
    /// Train again under the arm's configuration, from the single seed `seed`.
    Retrain { train: TrainConfig, seed: u64 },
    /// Use the base run's angle source unchanged.
    Reuse,
}

#[derive(Debug, Clone)]
pub struct ArmOutput {
    pub config: RunConfig,
    pub trained: Option<(TrainConfig, TrainResult)>,
    pub output: SuiteOutput,
}

fn run_arm(config: RunConfig, train: Option<(TrainConfig, u64)>, pool: &Pool) -> Result<ArmOutput> {
    let mut config = config;
    let trained = match train {
        Some((tc, seed)) => {
            let (result, _) = train_ensemble(&tc, seed, pool)?;
            config.source = AngleSource::Fourier(result.params.clone());
            Some((tc, result))
        }
        None => None,
    };
    let output = run_suite(&config, pool)?;
    Ok(ArmOutput {
        config,
        trained,
        output,
    })
}

pub fn ablation_suite(
    base: &RunConfig,
    which: Ablation,
    provenance: &ParamProvenance,
    pool: &Pool,
) -> Result<ArmOutput> {
    let config = ablated_run(base, which);
    let train = match provenance {
        ParamProvenance::Retrain { train, seed } => Some((ablated_train(train, which), *seed)),
        ParamProvenance::Reuse => None,
    };
    run_arm(config, train, pool)
}

pub fn norm_comparison_suite(
    base: &RunConfig,
    kinds: &[NormKind],
    provenance: &ParamProvenance,
    pool: &Pool,
) -> Result<Vec<(NormKind, ArmOutput)>> {
    kinds
        .iter()
        .map(|&kind| {
            let config = RunConfig {
                norm: kind,
                ..base.clone()
            };
            let train = match provenance {
                ParamProvenance::Retrain { train, seed } => Some((
                    TrainConfig {
                        norm: kind,
                        ..train.clone()
                    },
                    *seed,
                )),
                ParamProvenance::Reuse => None,
            };
            run_arm(config, train, pool).map(|arm| (kind, arm))
        })
        .collect()
}
