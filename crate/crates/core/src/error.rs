use thiserror::Error;

use crate::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),

    #[error("block length must be at least 1")]
    InvalidBlockLength,

    #[error("value {value} lies outside [{lo}, {hi}]")]
    OutOfRange {
        value: Box<Rational>,
        lo: Box<Rational>,
        hi: Box<Rational>,
    },

    #[error("digit {digit} at position {position} is not below the alphabet size {size}")]
    DigitOutOfRange {
        digit: u32,
        position: usize,
        size: u32,
    },

    #[error("period must be nonempty")]
    EmptyPeriod,

    #[error("permutation index {index} is out of range for {tuples} tuples")]
    IndexOutOfRange { index: String, tuples: usize },

    #[error("operator table is not a bijection of the {tuples} digit tuples")]
    NotBijection { tuples: usize },

    #[error("operator over {tuples} tuples exceeds the table limit of {limit}")]
    TableTooLarge { tuples: u128, limit: usize },

    #[error("base mismatch: expected {expected}, found {found}")]
    BaseMismatch { expected: u32, found: u32 },

    #[error("block length mismatch: expected {expected}, found {found}")]
    BlockLengthMismatch { expected: usize, found: usize },

    #[error("tuple has length {found}, expected {expected}")]
    TupleLength { expected: usize, found: usize },

    #[error("rank {0} is not a block boundary of the schedule")]
    NotBlockBoundary(usize),

    #[error("invalid interval [{lo}, {hi}]: need 0 <= a < b <= 1")]
    InvalidInterval {
        lo: Box<Rational>,
        hi: Box<Rational>,
    },

    #[error("enumerating {count} cylinders exceeds the limit of {limit}")]
    EnumerationTooLarge { count: String, limit: u64 },

    #[error("invalid probability vector: {0}")]
    InvalidProbabilities(String),

    #[error("partition needs at least one block")]
    EmptyPartition,

    #[error("series diverges: periodic part has unit ratio and nonzero contribution")]
    Divergent,

    #[error("alphabet size at position {position} is {size}, must be at least 2")]
    InvalidAlphabet { position: usize, size: u32 },

    #[error("unknown numeral system '{0}'")]
    UnknownSystem(String),

    #[error("numeral system '{system}' requires parameter '{param}'")]
    MissingParameter { system: String, param: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for malformed textual or JSON input, as opposed to domain violations.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn out_of_range(value: &Rational, lo: Rational, hi: Rational) -> Self {
        Error::OutOfRange {
            value: Box::new(value.clone()),
            lo: Box::new(lo),
            hi: Box::new(hi),
        }
    }

    pub(crate) fn invalid_interval(lo: &Rational, hi: &Rational) -> Self {
        Error::InvalidInterval {
            lo: Box::new(lo.clone()),
            hi: Box::new(hi.clone()),
        }
    }
}
