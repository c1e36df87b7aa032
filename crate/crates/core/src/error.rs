use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("invalid chord ({k},{l}) for m = {m}")]
    InvalidChord { k: usize, l: usize, m: usize },

    #[error("rank mismatch: m = {left} vs m = {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("m must be at least {min}, got {m}")]
    InvalidRank { m: usize, min: usize },

    #[error("n = {0} is even; the homology representation is only defined for odd n")]
    EvenDimension(i64),

    #[error(
        "n = 1 is excluded: the diffeomorphism criterion fails in that dimension because of \
         the additional obstruction given by the fundamental group at infinity"
    )]
    DimensionOne,

    #[error("n must be at least 2, got {0}")]
    DimensionTooSmall(i64),

    #[error("orbit exceeded the cap of {cap} tuples")]
    CapExceeded { cap: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("morphism is not closed")]
    NotClosed,

    #[error("morphism entry {source_index}->{target_index} has wrong degree")]
    WrongDegree {
        source_index: usize,
        target_index: usize,
    },

    #[error("complex still has identity-labelled differential entries")]
    Unreduced,

    #[error("invalid twisted complex: {0}")]
    InvalidComplex(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
