use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("problem size must be at least 1")]
    EmptyProblem,

    #[error("problem size {n} exceeds the enumeration limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("expected {expected} spins, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("spin value {0} is not +1 or -1")]
    InvalidSpin(i8),

    #[error("coefficient index ({i}, {j}) is invalid for n = {n}")]
    InvalidIndex { i: usize, j: usize, n: usize },

    #[error("approximation ratio {0} is outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("instance has no nonzero coefficient, cannot rescale")]
    ZeroInstance,

    #[error("state has {state} qubits but the spectrum has {spectrum}")]
    SizeMismatch { state: usize, spectrum: usize },

    #[error("training set is empty")]
    EmptyTrainingSet,

    #[error("training instances must share one size, found {0} and {1}")]
    MixedSizes(usize, usize),

    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}
