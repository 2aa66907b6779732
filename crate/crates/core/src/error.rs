use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `Falsified` is reserved for a failed check of a mathematical assertion the
/// library verifies (Howlett's decomposition, the Clifford lemmas, ...). All
/// other variants describe bad input or resource limits.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("root datum axioms violated: {0}")]
    Axiom(String),

    #[error("not a p-morphism: {0}")]
    NotPMorphism(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("verification failed: {0}")]
    Falsified(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::Falsified(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
