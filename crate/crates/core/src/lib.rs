//! Exact state-vector QAOA for QUBO problems in Ising form, with fixed
//! (transferable) parameters.
//!
//! This crate is `no_std` and only needs `alloc`. It contains everything that
//! is pure computation:
//!
//! - [`qubo`]: Ising-form QUBO instances and the two random ensembles.
//! - [`spectrum`]: exhaustive cost tables and approximation-ratio feasible sets.
//! - [`normalization`]: Frobenius, max-abs and weighted-norm rescaling.
//! - [`encoding`]: Fourier / sine-cosine angle schedules.
//! - [`simulator`]: the state-vector kernel and the success / expectation metrics.
//! - [`training`]: the min-over-ensemble objectives and a random-mutations search.
//! - [`metrics`]: per-instance evaluation records, shots-to-solution and summaries.
//!
//! IO, file formats, thread pools and the command line live in the `fpqaoa`
//! companion crate.
//!
//! # Conventions
//!
//! Bitstring index `b` encodes spins as follows: bit `k` (qubit `k`, counting
//! from the least significant bit) equal to `0` means `z_k = +1`, equal to `1`
//! means `z_k = -1`. Every module in this crate uses that convention.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod encoding;
pub mod error;
pub mod metrics;
pub mod normalization;
pub mod qubo;
pub mod rng;
pub mod simulator;
pub mod spectrum;
pub mod stats;
pub mod training;

pub use encoding::{decode, decode_sincos, AngleSchedule, AngleSource, DepthRule, FourierParams};
pub use error::{Error, Result};
pub use metrics::{
    brute_force_baseline, evaluate_instance, tts_model, EvalRecord, PreparedInstance,
};
pub use normalization::{norm_value, rescale, NormKind};
pub use qubo::{generate_mixed, generate_normal, EnsembleKind, EnsembleSpec, QuboInstance};
pub use simulator::{
    apply_cost_phase, apply_mixer, ar_expectation, energy_expectation, prepare_plus, run_qaoa,
    success_probability, StateVector,
};
pub use spectrum::{compute_spectrum, feasible_set, FeasibleSet, Spectrum};
pub use stats::{percentile, SummaryRow};
pub use training::{train, LossKind, TrainConfig, TrainResult, TrainingSet};

/// Largest problem size that may be enumerated or simulated.
///
/// A state of 26 qubits already takes 1 GiB of amplitudes.
pub const ENUMERATION_LIMIT: usize = 26;
