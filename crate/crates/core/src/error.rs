use thiserror::Error;

/// Errors produced by the core library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground-set size must be at least 1")]
    EmptyGroundSet,

    #[error("ground-set size {0} exceeds the supported maximum of {max}", max = crate::perm::MAX_N)]
    GroundSetTooLarge(usize),

    #[error("ground-set sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("label {label} is outside the ground set of size {n}")]
    LabelOutOfRange { label: i32, n: usize },

    #[error("label 0 is not a signed label")]
    ZeroLabel,

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("not a pair matching (fixed-point-free involution): {0}")]
    NotAPairMatching(String),

    #[error("transposition ({a} {b}) is degenerate")]
    DegenerateTransposition { a: i32, b: i32 },

    #[error("transposition ({a} {b}) is not admissible: it swaps a label with its bar")]
    InadmissibleTransposition { a: i32, b: i32 },

    #[error("partition weight {weight} does not match ground-set size {n}")]
    WeightMismatch { weight: usize, n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("matching sequence must start with tau")]
    FirstNotTau,

    #[error("invalid matching sequence: {0}")]
    InvalidMatchingSeq(String),

    #[error("preimage branches coincide at step {step}")]
    DuplicatePreimageBranch { step: usize },

    #[error("m >= 2 required for constellations (got m = {0})")]
    ConstellationTooShort(usize),

    #[error("malformed flag map: {0}")]
    MalformedFlags(String),

    #[error("not a simple constellation: {0}")]
    NotSimpleConstellation(String),

    #[error("malformed right path starting at label {label}: {reason}")]
    MalformedRightPath { label: i32, reason: String },

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("worker pool: {0}")]
    Workers(String),
}

pub type Result<T> = std::result::Result<T, Error>;
