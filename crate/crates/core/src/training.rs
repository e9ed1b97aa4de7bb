//! Training of fixed QAOA parameters on an ensemble of small instances.
//!
//! The default objective is the smallest success probability `P_alpha` over
//! the training set, maximized over the Fourier coefficients. The alternative
//! objective is the mean AR expectation.
//!
//! The search is a random-mutations hill climber with restarts:
//!
//! 1. Start from a uniform point in the box `[-bound, bound]^(2q)` (restart 0
//!    may start from a given initial point instead).
//! 2. Propose `x + sigma g` with `g` standard normal, clamped into the box.
//!    Accept iff the objective strictly improves.
//! 3. After `patience` consecutive rejections multiply `sigma` by `shrink`.
//! 4. After `budget` proposals, restart with `sigma` reset.
//!
//! The best point over all restarts is returned.

use alloc::vec::Vec;

use crate::encoding::{decode, AngleSchedule, DepthRule, FourierParams};
use crate::error::{Error, Result};
use crate::metrics::PreparedInstance;
use crate::normalization::NormKind;
use crate::qubo::{EnsembleKind, QuboInstance};
use crate::rng::Stream;
use crate::simulator::{ar_expectation, run_qaoa, success_probability};
use crate::spectrum::{feasible_set, FeasibleSet};
use crate::stats::pairwise_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LossKind {
    /// `min` over the training set of `P_alpha`.
    #[default]
    MinPAlpha,
    /// Arithmetic mean over the training set of the AR expectation.
    MeanArExpect,
}

impl LossKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LossKind::MinPAlpha => "min-palpha",
            LossKind::MeanArExpect => "ar-expect",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "min-palpha" => Some(LossKind::MinPAlpha),
            "ar-expect" => Some(LossKind::MeanArExpect),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Encoding {
    /// Two parameters `(u, v)`.
    #[default]
    SinCos,
    /// `q` coefficient pairs.
    Fourier(usize),
}

impl Encoding {
    pub fn q(self) -> usize {
        match self {
            Encoding::SinCos => 1,
            Encoding::Fourier(q) => q,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MutationConfig {
    pub restarts: usize,
    /// Proposals per restart. Zero disables the search entirely.
    pub budget: usize,
    pub sigma: f64,
    pub shrink: f64,
    pub patience: usize,
    /// Half-width of the search box for every coordinate.
    pub bound: f64,
}

impl Default for MutationConfig {
    fn default() -> Self {
        Self {
            restarts: 16,
            budget: 2000,
            sigma: 0.5,
            shrink: 0.9,
            patience: 20,
            bound: 4.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    pub kind: EnsembleKind,
    pub train_n: usize,
    pub train_count: usize,
    pub alpha: f64,
    pub loss: LossKind,
    pub encoding: Encoding,
    pub depth: DepthRule,
    pub norm: NormKind,
    pub optimizer: MutationConfig,
    pub initial: Option<FourierParams>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            kind: EnsembleKind::Normal,
            train_n: 6,
            train_count: 200,
            alpha: 0.95,
            loss: LossKind::MinPAlpha,
            encoding: Encoding::SinCos,
            depth: DepthRule::EqualN,
            norm: NormKind::Frobenius,
            optimizer: MutationConfig::default(),
            initial: None,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::AlphaOutOfRange(self.alpha));
        }
        if self.train_count == 0 {
            return Err(Error::EmptyTrainingSet);
        }
        if self.train_n == 0 {
            return Err(Error::EmptyProblem);
        }
        if self.encoding.q() == 0 {
            return Err(Error::InvalidConfig(
                "encoding needs at least one coefficient pair",
            ));
        }
        if let DepthRule::Fixed(0) = self.depth {
            return Err(Error::InvalidConfig("fixed depth must be at least 1"));
        }
        let o = &self.optimizer;
        if !(o.bound > 0.0 && o.sigma > 0.0 && o.shrink > 0.0 && o.shrink <= 1.0) {
            return Err(Error::InvalidConfig("optimizer constants out of range"));
        }
        if let Some(init) = &self.initial {
            if init.q() != self.encoding.q() {
                return Err(Error::InvalidConfig(
                    "initial point does not match the encoding",
                ));
            }
        }
        Ok(())
    }
}

/// One training instance with its cached spectrum and feasible set.
#[derive(Debug, Clone)]
pub struct TrainingItem {
    pub prepared: PreparedInstance,
    pub feasible: FeasibleSet,
}

impl TrainingItem {
    pub fn new(raw: &QuboInstance, norm: NormKind, alpha: f64) -> Result<Self> {
        let prepared = PreparedInstance::new(raw, norm)?;
        let feasible = feasible_set(&prepared.spectrum, alpha)?;
        Ok(Self { prepared, feasible })
    }

    /// Per-instance score under `loss` for an already decoded schedule.
    pub fn score(&self, schedule: &AngleSchedule, loss: LossKind) -> f64 {
        // sizes match by construction
        let state = run_qaoa(&self.prepared.spectrum, schedule).expect("training state");
        match loss {
            LossKind::MinPAlpha => success_probability(&state, &self.feasible),
            LossKind::MeanArExpect => {
                ar_expectation(&state, &self.prepared.spectrum).expect("training spectrum")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct TrainingSet {
    n: usize,
    items: Vec<TrainingItem>,
}

impl TrainingSet {
    pub fn from_items(items: Vec<TrainingItem>) -> Result<Self> {
        let n = items.first().ok_or(Error::EmptyTrainingSet)?.prepared.n();
        if let Some(other) = items.iter().find(|it| it.prepared.n() != n) {
            return Err(Error::MixedSizes(n, other.prepared.n()));
        }
        Ok(Self { n, items })
    }

    pub fn build(instances: &[QuboInstance], norm: NormKind, alpha: f64) -> Result<Self> {
        let items = instances
            .iter()
            .map(|inst| TrainingItem::new(inst, norm, alpha))
            .collect::<Result<Vec<_>>>()?;
        Self::from_items(items)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn items(&self) -> &[TrainingItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn schedule(&self, params: &FourierParams, depth: DepthRule) -> AngleSchedule {
        decode(params, depth.depth(self.n))
    }
}

/// Reduces per-instance scores to the training loss. `min` for
/// [`LossKind::MinPAlpha`], pairwise-summed mean for
/// [`LossKind::MeanArExpect`]; both only depend on the score order.
pub fn aggregate(loss: LossKind, scores: &[f64]) -> Result<f64> {
    if scores.is_empty() {
        return Err(Error::EmptyTrainingSet);
    }
    Ok(match loss {
        LossKind::MinPAlpha => scores.iter().copied().fold(f64::INFINITY, f64::min),
        LossKind::MeanArExpect => pairwise_sum(scores) / scores.len() as f64,
    })
}

fn loss_with(
    params: &FourierParams,
    set: &TrainingSet,
    depth: DepthRule,
    loss: LossKind,
) -> Result<f64> {
    let schedule = set.schedule(params, depth);
    let scores: Vec<f64> = set
        .items
        .iter()
        .map(|it| it.score(&schedule, loss))
        .collect();
    aggregate(loss, &scores)
}

/// Smallest `P_alpha` over the training set; feasible sets were fixed at
/// `cfg.alpha` when the set was built.
pub fn loss_min_p_alpha(
    params: &FourierParams,
    set: &TrainingSet,
    cfg: &TrainConfig,
) -> Result<f64> {
    loss_with(params, set, cfg.depth, LossKind::MinPAlpha)
}

/// Mean AR expectation over the training set.
pub fn loss_ar_expect(params: &FourierParams, set: &TrainingSet, cfg: &TrainConfig) -> Result<f64> {
    loss_with(params, set, cfg.depth, LossKind::MeanArExpect)
}

pub fn evaluate_loss(params: &FourierParams, set: &TrainingSet, cfg: &TrainConfig) -> Result<f64> {
    loss_with(params, set, cfg.depth, cfg.loss)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrainResult {
    pub params: FourierParams,
    pub achieved_loss: f64,
    pub eval_count: usize,
    /// `(evaluation index, best loss so far)` at every improvement.
    pub trace: Vec<(usize, f64)>,
}

/// Outcome of [`random_mutations`] on a flat parameter vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub best: Vec<f64>,
    pub best_value: f64,
    pub evals: usize,
    pub trace: Vec<(usize, f64)>,
}

/// Maximizes `objective` over `[-bound, bound]^dim`. NaN objective values
/// count as `-inf`.
pub fn random_mutations<F>(
    dim: usize,
    cfg: &MutationConfig,
    initial: Option<&[f64]>,
    seed: u64,
    mut objective: F,
) -> SearchOutcome
where
    F: FnMut(&[f64]) -> f64,
{
    let mut stream = Stream::new(seed);
    let mut out = SearchOutcome {
        best: Vec::new(),
        best_value: f64::NEG_INFINITY,
        evals: 0,
        trace: Vec::new(),
    };
    let mut eval = |x: &[f64], out: &mut SearchOutcome| -> f64 {
        let v = objective(x);
        let v = if v.is_nan() { f64::NEG_INFINITY } else { v };
        out.evals += 1;
        if out.best.is_empty() || v > out.best_value {
            out.best = x.to_vec();
            out.best_value = v;
            out.trace.push((out.evals, v));
        }
        v
    };

    let bound = cfg.bound;
    for restart in 0..cfg.restarts.max(1) {
        let mut x: Vec<f64> = match initial {
            Some(init) if restart == 0 => init.iter().map(|v| v.clamp(-bound, bound)).collect(),
            _ => (0..dim).map(|_| stream.uniform_in(-bound, bound)).collect(),
        };
        let mut fx = eval(&x, &mut out);
        if cfg.budget == 0 {
            break;
        }
        let mut sigma = cfg.sigma;
        let mut rejected = 0;
        for _ in 0..cfg.budget {
            let y: Vec<f64> = x
                .iter()
                .map(|xi| (xi + sigma * stream.standard_normal()).clamp(-bound, bound))
                .collect();
            let fy = eval(&y, &mut out);
            if fy > fx {
                x = y;
                fx = fy;
                rejected = 0;
            } else {
                rejected += 1;
                if rejected >= cfg.patience {
                    sigma *= cfg.shrink;
                    rejected = 0;
                }
            }
        }
    }
    out
}

/// Runs the search with a caller-supplied loss (e.g. a parallel one).
pub fn train_with<F>(cfg: &TrainConfig, seed: u64, mut loss: F) -> Result<TrainResult>
where
    F: FnMut(&FourierParams) -> f64,
{
    cfg.validate()?;
    let dim = 2 * cfg.encoding.q();
    let initial = cfg.initial.as_ref().map(FourierParams::to_flat);
    let outcome = random_mutations(dim, &cfg.optimizer, initial.as_deref(), seed, |x| {
        loss(&FourierParams::from_flat(x))
    });
    Ok(TrainResult {
        params: FourierParams::from_flat(&outcome.best),
        achieved_loss: outcome.best_value,
        eval_count: outcome.evals,
        trace: outcome.trace,
    })
}

/// Trains on a prepared set, evaluating serially.
pub fn train(cfg: &TrainConfig, set: &TrainingSet, seed: u64) -> Result<TrainResult> {
    if set.is_empty() {
        return Err(Error::EmptyTrainingSet);
    }
    train_with(cfg, seed, |params| {
        evaluate_loss(params, set, cfg).unwrap_or(f64::NEG_INFINITY)
    })
}
