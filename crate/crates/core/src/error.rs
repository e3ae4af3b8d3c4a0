use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("word `{0}` is not accepted")]
    NotAccepted(String),
    #[error("index {index} is beyond the finite language of {size} words")]
    IndexOutOfRange { index: BigUint, size: BigUint },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not enough terms: need {needed}, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),
    #[error("recurrence is not minimal: {0}")]
    NonMinimalRecurrence(String),
    #[error("{p} does not divide the last coefficient {last}")]
    NotADivisor { p: u64, last: String },
    #[error("N({p}^v) never exceeded {threshold} for v <= {cap}")]
    CapExceeded { p: u64, threshold: u64, cap: u32 },
    #[error("digit {0} is outside the digit alphabet")]
    DigitOutOfRange(usize),
    #[error("invalid numeration system: {0}")]
    InvalidSystem(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("presentation rejected: {0}")]
    PresentationMismatch(String),
    #[error("modulus too large: {0}")]
    ModulusTooLarge(String),
    #[error("bound too large to evaluate: {0}")]
    BoundTooLarge(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
