//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by constructors, predicates and engines.
///
/// Every operation that can be called with out-of-contract arguments fails
/// loudly with one of these variants instead of coercing or truncating.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be a positive integer")]
    ZeroDegree,

    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("image word has length {got}, expected degree {expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("image entry {value} at position {position} lies outside 1..={degree}")]
    EntryOutOfRange {
        position: usize,
        value: usize,
        degree: usize,
    },

    #[error("point {point} lies outside the chain 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("transformation is not order-preserving")]
    NotOrderPreserving,

    #[error("index {index} outside {low}..={high} for {name}")]
    IndexOutOfRange {
        name: &'static str,
        index: usize,
        low: usize,
        high: usize,
    },

    #[error("{name} requires degree at least {min}, got {degree}")]
    BelowThreshold {
        name: &'static str,
        degree: usize,
        min: usize,
    },

    #[error("degree {degree} exceeds the enumeration cap {cap}")]
    AboveEnumerationCap { degree: usize, cap: usize },

    #[error("degree {degree} exceeds the definitional-search cap {cap}")]
    AboveDefinitionalCap { degree: usize, cap: usize },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("no closed-form count for this set")]
    NoClosedForm,

    #[error("no rank formula applies to this set at these parameters")]
    NoRankFormula,

    #[error("empty generating set")]
    EmptyGenerators,

    #[error("element store is empty")]
    EmptyStore,

    #[error("element set is not closed under composition")]
    NotClosed,

    #[error("blocks do not partition the chain: {0}")]
    NotAPartition(String),

    #[error("cannot parse transformation from {input:?}: {reason}")]
    ParseTransformation { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
