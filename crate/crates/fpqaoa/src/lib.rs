//! Experiment harness around [`fpqaoa_core`]: instance and result files,
//! parallel ensemble evaluation, training drivers, ablations and sweeps, and
//! the `fpqaoa` command line.

pub mod cli;
pub mod error;
pub mod format;
pub mod pool;
pub mod seeds;
pub mod suite;
pub mod trainer;

pub use error::{Error, Result};
pub use fpqaoa_core as core;
pub use pool::Pool;
pub use suite::{
    ablated_run, ablation_suite, alpha_sweep, norm_comparison_suite, run_suite, Ablation,
    ArmOutput, ParamProvenance, RunConfig, SuiteOutput,
};
pub use trainer::train_ensemble;
