//! Training on a generated ensemble with the loss evaluated in parallel over
//! training instances.

use fpqaoa_core::qubo::EnsembleSpec;
use fpqaoa_core::training::{aggregate, train_with, TrainConfig, TrainingItem, TrainingSet};
use fpqaoa_core::{FourierParams, TrainResult};

use crate::{seeds, Error, Pool, Result};

/// Generates `cfg.train_count` instances of size `cfg.train_n` from
/// `ensemble_base`, rescales them and caches spectra and feasible sets.
pub fn build_training_set(
    cfg: &TrainConfig,
    ensemble_base: u64,
    pool: &Pool,
) -> Result<TrainingSet> {
    cfg.validate()?;
    let spec = EnsembleSpec {
        kind: cfg.kind,
        n: cfg.train_n,
        count: cfg.train_count,
        base_seed: ensemble_base,
        normalization: cfg.norm,
    };
    spec.validate()?;
    let items = pool.try_map(spec.count, |k| {
        let raw = spec.instance(k)?;
        TrainingItem::new(&raw, cfg.norm, cfg.alpha).map_err(|source| Error::Instance {
            n: raw.n(),
            seed: raw.seed,
            source,
        })
    })?;
    Ok(TrainingSet::from_items(items)?)
}

/// Training loss of `params`; bitwise equal to the serial
/// `fpqaoa_core::training::evaluate_loss`.
pub fn parallel_loss(
    params: &FourierParams,
    set: &TrainingSet,
    cfg: &TrainConfig,
    pool: &Pool,
) -> Result<f64> {
    let schedule = set.schedule(params, cfg.depth);
    let items = set.items();
    let scores = pool.map(items.len(), |i| items[i].score(&schedule, cfg.loss));
    Ok(aggregate(cfg.loss, &scores)?)
}

/// Full training run driven by the single seed `seed` (see [`seeds`]).
pub fn train_ensemble(
    cfg: &TrainConfig,
    seed: u64,
    pool: &Pool,
) -> Result<(TrainResult, TrainingSet)> {
    let set = build_training_set(cfg, seeds::train_ensemble(seed), pool)?;
    let result = train_on(cfg, &set, seeds::optimizer(seed), pool)?;
    Ok((result, set))
}

pub fn train_on(
    cfg: &TrainConfig,
    set: &TrainingSet,
    optimizer_seed: u64,
    pool: &Pool,
) -> Result<TrainResult> {
    Ok(train_with(cfg, optimizer_seed, |params| {
        parallel_loss(params, set, cfg, pool).unwrap_or(f64::NEG_INFINITY)
    })?)
}
