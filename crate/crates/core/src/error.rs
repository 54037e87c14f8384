use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational {0:?}: expected base-10 \"p/q\" or \"p\"")]
    ParseRational(String),
    #[error("duplicate term with exponents (i={i}, j={j})")]
    DuplicateTerm { i: u32, j: u32 },
    #[error("divisor is constant")]
    ConstantDivisor,
    #[error("divisor is not linear with constant leading coefficient in its leading variable")]
    NonLinearDivisor,
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("duplicate element {0} in ground set")]
    DuplicateElement(String),
    #[error("empty ground set")]
    EmptySet,
    #[error("invalid set specification: {0}")]
    InvalidSet(String),
    #[error("rich-point threshold must be at least 2, got {0}")]
    InvalidThreshold(u64),
    #[error("theorem hypotheses violated: {0}")]
    HypothesisViolated(String),
    #[error("need >= 2 sizes")]
    TooFewSizes,
    #[error("sizes must be strictly increasing")]
    SizesNotIncreasing,
    #[error("resource cap exceeded: more than {cap} entries")]
    ResourceCap { cap: usize },
    #[error("bisector parallel to y-axis or point pair degenerate")]
    DegeneratePair,
    #[error("conservation check failed: {0}")]
    ConservationFailure(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
