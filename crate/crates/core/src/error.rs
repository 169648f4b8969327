use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed ring: {0}")]
    MalformedRing(String),
    #[error("elements belong to different rings")]
    MixedRings,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("incompatible series coefficients")]
    IncompatibleSeries,
    #[error("series order {have} is too small, need {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("{0} formal variables cannot resolve weight {1}")]
    InsufficientVariables(usize, usize),
    #[error("real dimension {0} is not divisible by 4")]
    NotMultipleOfFour(u32),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("polynomial degree bound {max_degree} violated at c = {sample}")]
    DegreeBound { max_degree: usize, sample: i64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for failures that indicate a bug or a falsified mathematical
    /// assumption, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_) | Error::DegreeBound { .. })
    }
}
