use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A gamma function (or Pochhammer denominator) was asked for a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A closed-form identity that must hold was violated beyond tolerance.
    #[error("constraint violated: {name} (residual {residual:e})")]
    Constraint { name: String, residual: f64 },

    /// The quantum numbers do not describe a normalizable bound state.
    #[error("inadmissible state: {0}")]
    Inadmissible(String),

    #[error("rank deficient input at index {index}")]
    RankDeficient { index: usize },

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
