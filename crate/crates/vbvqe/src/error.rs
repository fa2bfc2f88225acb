//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by construction, parsing and execution.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must act on the same register do not.
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    /// A qubit index is outside the register.
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    /// A structural invariant was violated while building an object.
    #[error("invalid construction: {0}")]
    Invalid(String),

    /// A dense-matrix or diagonalization request exceeds the qubit cap.
    #[error("{n_qubits} qubits exceeds the dense-matrix cap of {cap}")]
    ResourceLimit { n_qubits: usize, cap: usize },

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A parameter vector has the wrong length.
    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },

    /// Imaginary residue survived a transformation that must emit a
    /// Hermitian operator.
    #[error("non-Hermitian result: residual imaginary coefficient {0:e}")]
    NonHermitian(f64),

    /// The requested symmetry reduction does not pin the expected qubits.
    #[error("unsupported reduction: {0}")]
    UnsupportedReduction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
