use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("vector entries must have gcd 1")]
    NotPrimitive,
    #[error("one-parameter subgroup does not lie in the group: <d, l> = {0}")]
    NotInGroup(String),
    #[error("group of dimension {dimension} in A^{ambient} is below codimension one")]
    CodimensionTooLarge { dimension: usize, ambient: usize },
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Precondition violations, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Malformed(_))
    }

    /// Variant name, used as a stable error identifier.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::NotUnimodular => "NotUnimodular",
            Error::ZeroVector => "ZeroVector",
            Error::NotPrimitive => "NotPrimitive",
            Error::NotInGroup(_) => "NotInGroup",
            Error::CodimensionTooLarge { .. } => "CodimensionTooLarge",
            Error::TooLarge(_) => "TooLarge",
            Error::Malformed(_) => "Malformed",
        }
    }

    /// Process exit code: 1 for malformed input, 2 for precondition violations.
    pub fn exit_code(&self) -> i32 {
        if self.is_precondition() {
            2
        } else {
            1
        }
    }
}
