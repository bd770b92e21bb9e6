use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("matrix is not in the image of the multiplication embedding")]
    NotInImage,
    #[error("field is not quadratic over the given subfield")]
    NotQuadraticOver,
    #[error("precision ceiling of {0} bits reached with the exact fallback disabled")]
    PrecisionExhausted(u32),
    #[error("seed parameter violates the window inequalities")]
    NotSatisfiedAtSeed,
    #[error("unit rank is not one: signature ({r1},{r2})")]
    WrongSignature { r1: usize, r2: usize },
    #[error("infinite places do not follow the split/ramified pattern")]
    SplittingPatternMismatch,
    #[error("no period found within {0} steps")]
    BudgetExhausted(usize),
    #[error("certificate check failed: {0}")]
    CertificateFailure(String),
    #[error("prime does not split: {0}")]
    NotSplit(String),
    #[error("expansion is not purely periodic")]
    PurePeriodicityViolated,
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
