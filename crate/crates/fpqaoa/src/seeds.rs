//! Derivation of every seed from the single `--seed` value `S`.
//!
//! | stream                      | seed                              |
//! |-----------------------------|-----------------------------------|
//! | test instances of size `n`  | `child_seed(S, n)`                |
//! | training instances          | `child_seed(S, TRAIN_ENSEMBLE)`   |
//! | optimizer                   | `child_seed(S, OPTIMIZER)`        |
//!
//! Instance `k` of an ensemble with base `B` then uses `child_seed(B, k)`.
//! `generate` uses `S` itself as the ensemble base.

use fpqaoa_core::rng::child_seed;

pub const TRAIN_ENSEMBLE: u64 = 1_000_001;
pub const OPTIMIZER: u64 = 1_000_002;

pub fn test_ensemble(seed: u64, n: usize) -> u64 {
    child_seed(seed, n as u64)
}

pub fn train_ensemble(seed: u64) -> u64 {
    child_seed(seed, TRAIN_ENSEMBLE)
}

pub fn optimizer(seed: u64) -> u64 {
    child_seed(seed, OPTIMIZER)
}
