use thiserror::Error;

/// Errors raised by the group, wall and embedding layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be between 1 and {max}, got {rank}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("lamp group must be nontrivial (order >= 2), got order {0}")]
    TrivialLampGroup(usize),

    #[error("lamp group order {order} exceeds the supported maximum {max}")]
    LampOrderTooLarge { order: usize, max: usize },

    #[error("invalid lamp group table: {0}")]
    InvalidTable(String),

    #[error("lamp value {value} out of range for lamp group of order {order}")]
    LampOutOfRange { value: u32, order: usize },

    #[error("lamp configuration stores the identity at {0}")]
    IdentityLamp(String),

    #[error("{0} is not an element of the base group")]
    ForeignElement(String),

    #[error("a tree wall needs a nonempty deep endpoint")]
    IdentityWall,

    #[error("duplicate lamp position {0}")]
    DuplicatePosition(String),

    #[error("decoration position {0} lies inside the base half-space")]
    DecorationInsideHalfSpace(String),

    #[error("enumeration would produce {predicted} elements, above the cap of {cap}")]
    CapExceeded { predicted: String, cap: u64 },

    #[error("search radius {radius} is smaller than the wall bound {max_wall}")]
    RadiusTooSmall { radius: usize, max_wall: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("distance matrix is not square")]
    NotSquare,

    #[error("distance matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("distance matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),

    #[error("tolerance must be positive")]
    BadTolerance,

    #[error("duplicate sample element {0}")]
    DuplicateSample(String),
}

pub type Result<T> = std::result::Result<T, Error>;
