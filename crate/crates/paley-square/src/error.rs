use thiserror::Error;

/// Errors surfaced by field construction, set predicates and the census.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime power")]
    NotAnOddPrimePower(u64),
    #[error("q = {0} exceeds the supported table size (q <= 8192)")]
    SizeLimitExceeded(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero is not a unit")]
    NotAUnit,
    #[error("d must be a non-square in the base field")]
    DIsASquare,
    #[error("a line needs a nonzero slope")]
    ZeroSlope,
    #[error("adjacency is undefined on equal vertices")]
    SelfLoop,
    #[error("set is neither a clique nor an independent set")]
    KindMismatch,
    #[error("the two vertices are not adjacent")]
    NotAnArc,
    #[error("the set is not a clique")]
    NotAClique,
    #[error("element is not on the unit circle")]
    NotOnCircle,
    #[error("the map has its patched fixed point here")]
    PoleAtOne,
    #[error("gamma must differ from 1 and -1")]
    DegenerateGamma,
    #[error("census budget exhausted before completion")]
    BudgetExhausted,
    #[error("cache file is malformed: {0}")]
    MalformedCache(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
