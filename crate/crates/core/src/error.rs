use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
///
/// Variants are grouped by how a caller should react: malformed input,
/// unmet mathematical hypotheses, and internal consistency failures that
/// indicate a bug rather than a bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ZeroValuation,

    #[error("order undefined over C")]
    ComplexOrder,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("finite function required")]
    NonFinite,

    #[error("enumeration bound exceeded: n = {n}, limit {limit}")]
    EnumerationBound { n: usize, limit: usize },

    #[error("Gram of singular matrix is not PD")]
    SingularGram,

    #[error("principal minor on {subset} vanishes; point leaves the torus")]
    ZeroPrincipalMinor { subset: String },

    #[error("flag point has vanishing Plücker coordinate on {subset}")]
    VanishingPlucker { subset: String },

    #[error("hypothesis unmet: {0}")]
    Hypothesis(String),

    #[error("genericity not achieved after {attempts} draws; failing pair rows {rows}, cols {cols}")]
    Genericity {
        attempts: usize,
        rows: String,
        cols: String,
    },

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
