use thiserror::Error;

use crate::qstate::BellKind;

/// Errors raised by the linear algebra, state constructors and protocol engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix entry array has length {len}, expected a square of dimension {dim}")]
    BadShape { dim: usize, len: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("subsystem dims {dims:?} do not multiply to matrix dimension {dim}")]
    InvalidSubsystems { dims: Vec<usize>, dim: usize },

    #[error("partial trace needs a nonempty set of kept subsystems")]
    EmptyKeep,

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemOutOfRange { index: usize, count: usize },

    #[error("alpha = {0} outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("rho00 = {0} outside [0, 1]")]
    PopulationOutOfRange(f64),

    #[error("positivity violated: |rho01|^2 = {coherence_sq} exceeds rho00*rho11 = {bound}")]
    CoherenceTooLarge { coherence_sq: f64, bound: f64 },

    #[error("state vector norm {0} is not 1")]
    NotNormalized(f64),

    #[error("density matrix trace {0} is not 1")]
    TraceNotOne(f64),

    #[error("density matrix has negative eigenvalue {0:e}")]
    NotPositive(f64),

    #[error("dimension {0} is not a power of two")]
    NotQubits(usize),

    #[error("expected a {expected}-qubit state, got {actual} qubits")]
    WrongQubitCount { expected: usize, actual: usize },

    #[error("Bell outcome {outcome:?} has probability {probability:e}; post-measurement state undefined")]
    UndefinedOutcome { outcome: BellKind, probability: f64 },

    #[error("{0} grid is empty")]
    EmptyGrid(&'static str),

    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("shot count must be at least 1")]
    ZeroShots,
}

pub type Result<T> = std::result::Result<T, Error>;
