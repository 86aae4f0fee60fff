use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cycle size must be at least 3, got {0}")]
    CycleTooSmall(usize),

    #[error("vertex {vertex} out of range on a cycle with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("time must be nonnegative, got {0}")]
    NegativeTime(f64),

    #[error("coin matrix is not unitary (defect {defect:.3e})")]
    NonUnitaryCoin { defect: f64 },

    #[error("coin state must have unit norm (defect {defect:.3e})")]
    NonUnitCoinState { defect: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{context}: normalization defect {defect:.3e} exceeds {tol:.0e}")]
    NormalizationDefect {
        context: &'static str,
        defect: f64,
        tol: f64,
    },

    #[error("probability entry {index} is {value:.3e}, below the round-off floor")]
    NegativeProbability { index: usize, value: f64 },

    #[error("closed form requires {requirement}, got N={n}")]
    ClosedFormUnavailable {
        requirement: &'static str,
        n: usize,
    },

    #[error(
        "resonance matching unsafe: nonzero frequency combination {gap:.3e} \
         is within 100x the matching tolerance {tol:.0e}"
    )]
    ResonanceGapTooSmall { gap: f64, tol: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Whether the error reports a violated numerical invariant, as opposed
    /// to a rejected input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NormalizationDefect { .. }
                | Error::NegativeProbability { .. }
                | Error::ResonanceGapTooSmall { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
