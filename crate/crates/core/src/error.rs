use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a word must have at least one part")]
    EmptyWord,

    #[error("part {position} is zero; parts must be positive integers")]
    ZeroPart { position: usize },

    #[error("word {inner} is a substring of word {outer}")]
    ContainmentViolation { inner: usize, outer: usize },

    #[error("words {first} and {second} are identical")]
    DuplicateWord { first: usize, second: usize },

    #[error("invalid part in {0:?}: parts are base-10 positive integers")]
    InvalidPart(String),

    #[error("exponents must be positive and strictly increasing")]
    InvalidExponents,

    #[error("letter {letter} is outside the alphabet 1..={alphabet_size}")]
    LetterOutOfAlphabet { letter: u32, alphabet_size: u32 },

    #[error("nonzero coefficient at weight {weight}, length {length} lies outside the triangle length <= weight")]
    NonTriangular { weight: usize, length: usize },

    #[error("truncation bounds differ ({left} vs {right})")]
    BoundMismatch { left: usize, right: usize },

    #[error("constant term {0} is not a unit (+1 or -1)")]
    NonUnitConstant(String),

    #[error("matrix of size {size} exceeds the limit of {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },

    #[error("matrix is not square")]
    NotSquare,

    #[error("{what} {requested} exceeds the cap of {cap}")]
    BoundTooLarge {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("index {index} is out of range for a set of {len} words")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors caused by a requested size or bound, as opposed to
    /// malformed input.
    pub fn is_bound(&self) -> bool {
        matches!(
            self,
            Error::SizeLimitExceeded { .. } | Error::BoundTooLarge { .. }
        )
    }

    pub fn is_invariant(&self) -> bool {
        matches!(
            self,
            Error::Invariant(_) | Error::NonUnitConstant(_) | Error::NonTriangular { .. }
        )
    }
}
