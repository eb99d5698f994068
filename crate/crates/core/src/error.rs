use alloc::string::String;

use crate::quantity::Time;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid time horizon [{first}, {last}]")]
    InvalidHorizon { first: Time, last: Time },
    #[error("interval [{start}, {finish}) is empty or reversed")]
    EmptyInterval { start: Time, finish: Time },
    #[error("interval [{start}, {finish}) overlaps or precedes the previous one")]
    Unordered { start: Time, finish: Time },
    #[error("interval [{start}, {finish}) lies outside [{low}, {high})")]
    OutsideRange { start: Time, finish: Time, low: Time, high: Time },
    #[error("breakpoints must be strictly ascending with at least two entries")]
    Breakpoints,
    #[error("duplicate node label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown node label {0:?}")]
    UnknownLabel(String),
    #[error("node {index} out of range (size {size})")]
    NodeOutOfRange { index: usize, size: usize },
    #[error("operation requires a one-mode network")]
    NotOneMode,
    #[error("operation requires a two-mode network")]
    NotTwoMode,
    #[error("inner dimensions differ: label {0:?} has no counterpart")]
    DimensionMismatch(String),
    #[error("inner dimension sizes differ ({left} vs {right})")]
    DimensionSize { left: usize, right: usize },
    #[error("time horizons differ")]
    HorizonMismatch,
    #[error("link ({tail}, {head}) violates the declared {kind} kind")]
    KindViolation { tail: usize, head: usize, kind: &'static str },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
