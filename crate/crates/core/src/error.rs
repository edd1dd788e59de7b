use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: String, message: String },

    #[error("index out of range at token {token}: {index} not in 1..={max}")]
    IndexOutOfRange { token: usize, index: usize, max: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word contains virtual letters; {0} is defined for classical braids only")]
    VirtualLetters(&'static str),

    #[error("parameter {name} is not on the unit circle (|{name}| = {modulus})")]
    NonUnitParameter { name: String, modulus: f64 },

    #[error("state is not normalized (norm^2 = {0})")]
    NotNormalized(f64),

    #[error("expected {expected} qubits, got {actual}")]
    QubitCount { expected: usize, actual: usize },

    #[error("qubit {qubit} out of range for {qubits} qubits")]
    QubitOutOfRange { qubit: usize, qubits: usize },

    #[error("invalid bipartition: {0}")]
    InvalidCut(String),

    #[error("{qubits} qubits exceeds the dense limit of {limit}")]
    TooLarge { qubits: usize, limit: usize },

    #[error("trace evaluation requires c = d (|c - d| = {0})")]
    CNotEqualD(f64),

    #[error("{0}")]
    Invalid(String),

    /// An internal consistency check failed.
    #[error("assertion failed: {0}")]
    Assertion(String),
}
