use thiserror::Error;

use crate::model::AlgorithmKind;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count must be between 1 and {max}, got {0}", max = crate::model::MAX_QUBITS)]
    QubitCount(u32),
    #[error("target set is empty")]
    NoTargets,
    #[error("target index {index} is outside the database of size {size}")]
    TargetOutOfRange { index: usize, size: usize },
    #[error("target proportion must lie in (0, 1], got {0}")]
    Proportion(f64),
    #[error("phase parameter is not finite")]
    NonFinitePhase,
    #[error("{0} is not covered by the phase-transform condition")]
    UnsupportedKind(AlgorithmKind),
    #[error("parameters violate the phase-transform condition: {0}")]
    ConditionViolated(String),
    #[error("invalid grid: {0}")]
    Grid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
