use std::time::Duration;

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: duplicate {what} `{name}`")]
    Duplicate {
        line: usize,
        what: &'static str,
        name: String,
    },

    #[error("line {line}: transition targets undeclared state {state} (only {declared} declared)")]
    DanglingTarget {
        line: usize,
        state: usize,
        declared: usize,
    },

    #[error("missing `{0}` header")]
    MissingHeader(&'static str),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("alphabets differ: [{left}] vs [{right}]")]
    AlphabetMismatch { left: String, right: String },

    #[error("invalid regular expression at offset {offset}: {message}")]
    Regex { offset: usize, message: String },

    #[error("Kleene star of a series with constant term 1 diverges")]
    DivergentStar,

    #[error("rational function has a zero denominator constant term")]
    ZeroConstantDenominator,

    #[error("coefficient {index} is not an integer")]
    NonIntegerCoefficient { index: usize },

    #[error("work budget exceeded: {0}")]
    ResourceLimit(String),

    #[error("time limit of {0:?} exceeded")]
    TimeLimit(Duration),

    #[error("random walk gave up after {restarts} restarts")]
    WalkExhausted { restarts: u64 },

    #[error("the language is empty")]
    EmptyLanguage,

    #[error("states {0} and {1} are indistinguishable; the automaton is not minimal")]
    Indistinguishable(usize, usize),

    #[error("W-method test set would contain about {estimate} traces (cap {cap})")]
    TestSetTooLarge { estimate: u128, cap: u128 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
