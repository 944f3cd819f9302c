use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is out of range for type {kind} (need {bound})")]
    RankOutOfRange {
        kind: char,
        rank: usize,
        bound: &'static str,
    },

    #[error("unknown Cartan type `{0}`; expected A, B, C or D followed by a rank, e.g. `C3`")]
    BadTypeName(String),

    #[error("entry {entry} is not in the alphabet of {kind}{rank}")]
    InvalidEntry { kind: char, rank: usize, entry: i32 },

    #[error("index {index} is not in the index set 1..={rank}")]
    InvalidIndex { index: usize, rank: usize },

    #[error("the period must be nonempty")]
    EmptyPeriod,

    #[error("index {0} never occurs in the period, so it would occur only finitely often")]
    MissingIndex(usize),

    #[error("index {index} repeats at positions {position} and {next}")]
    AdjacentRepeat {
        index: usize,
        position: usize,
        next: usize,
    },

    #[error("orientation bit missing for edge {{{0},{1}}}")]
    MissingOrientation(usize, usize),

    #[error("{{{0},{1}}} is not an edge of the Dynkin diagram")]
    NotAnEdge(usize, usize),

    #[error("the sequence is not adapted: indices {0} and {1} do not alternate")]
    NotAdapted(usize, usize),

    #[error("inadmissible tableau {tableau}: {reason}")]
    Inadmissible { tableau: String, reason: String },

    #[error("the spin symbol is only available in types C and D")]
    SpinNotAllowed,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
