use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("amplitude vector has length {found}, expected 2^{num_qubits} = {expected}")]
    LengthMismatch {
        num_qubits: usize,
        expected: usize,
        found: usize,
    },
    #[error("amplitude vector has zero norm")]
    ZeroVector,
    #[error("amplitude {index} is not finite")]
    NonFinite { index: usize },
    #[error("qubit count {0} outside supported range 1..={max}", max = crate::state::MAX_QUBITS)]
    UnsupportedQubitCount(usize),
    #[error("states act on {left} and {right} qubits")]
    DimensionMismatch { left: usize, right: usize },
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit state")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },
    #[error("measurement needs at least 2 qubits, state has {0}")]
    TooFewQubits(usize),
    #[error("measurement basis is not orthonormal")]
    NonOrthonormalBasis,
    #[error("outcome {0} is not 0 or 1")]
    InvalidOutcome(u8),
    #[error("invalid bipartition: {0}")]
    InvalidPartition(String),
    #[error("unknown link component {0}")]
    UnknownComponent(usize),
    #[error("classification needs a 3-qubit profile, got {0} qubits")]
    WrongArity(usize),
    #[error("invalid qubit-to-component mapping: {0}")]
    InvalidMapping(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed document: {0}")]
    Parse(String),
    #[error("schema violation: {0}")]
    Schema(String),
}
