//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by root-system construction, Weyl-group arithmetic, and
/// the Peterson-variety computations built on them.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(
        "unrecognized Lie type {0:?}; expected a family letter A-G followed by a rank, e.g. \"C3\""
    )]
    UnknownType(String),
    #[error("rank {rank} is not valid for family {family}; valid ranks are {allowed}")]
    InvalidRank {
        family: char,
        rank: usize,
        allowed: &'static str,
    },
    #[error("simple-root index {index} is out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("duplicate simple-root index {0} in subset")]
    DuplicateIndex(usize),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("position {position} is out of range 1..={length}")]
    PositionOutOfRange { position: usize, length: usize },
    #[error("enumeration exceeded the cap of {cap} results")]
    CapExceeded { cap: usize },
    #[error("polynomial is not homogeneous: it has terms of degree {0} and degree {1}")]
    NotHomogeneous(usize, usize),
    #[error("rank mismatch: element has rank {found}, root system has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
