use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A size or tolerance argument violates an operation's precondition.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The zero-frequency coefficient is too large for the antiderivative.
    #[error("input has nonzero mean {mean:e} (tolerance {tol:e})")]
    NonzeroMean { mean: f64, tol: f64 },

    /// The boundary map has (nearly) vanishing derivative on the circle.
    #[error("degenerate immersion: min |Φ'| = {min_speed:e} below {threshold:e}")]
    DegenerateImmersion { min_speed: f64, threshold: f64 },

    /// The boundary image of the map crosses or touches itself.
    #[error("boundary curve is not simple ({witnesses} intersection witnesses)")]
    NonSimpleBoundary { witnesses: usize },

    /// Internal consistency check in the forward computation failed.
    #[error("forward computation inconsistent: {0}")]
    ForwardConsistency(String),

    /// No singular value of H − I falls under the threshold.
    #[error("near-fixed subspace is empty at eps = {eps:e} (smallest singular value {smallest:e})")]
    EmptySubspace { eps: f64, smallest: f64 },

    /// A matrix does not satisfy the structural requirements of its kind.
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than numerical breakdown.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parameter(_)
                | Error::InvalidMatrix(_)
                | Error::Format(_)
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
