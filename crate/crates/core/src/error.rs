use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators have gcd {gcd}, the complement is infinite")]
    InfiniteComplement { gcd: u32 },

    #[error("complement of the gap set is not closed: {a} + {b} = {} is a gap", a + b)]
    NotClosed { a: u32, b: u32 },

    #[error("the semigroup is N itself and has no gaps")]
    EmptySemigroupComplement,

    #[error("genus {genus} is below 2, the Buchweitz test is not applied")]
    GenusTooSmall { genus: u32 },

    #[error("malformed gap set: {0}")]
    MalformedGapSet(String),

    #[error("not a PF-semigroup")]
    NotPFSemigroup,

    #[error("Schubert index does not come from the sequence family: {0}")]
    NotPFShape(String),

    #[error("paste needs the last entry of the prefix sequence ({last}) to exceed k = {k}")]
    PasteConditionViolated { last: u32, k: u32 },

    #[error("{0}")]
    PreconditionUnverified(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable variant name, printed verbatim by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InfiniteComplement { .. } => "InfiniteComplement",
            Error::NotClosed { .. } => "NotClosed",
            Error::EmptySemigroupComplement => "EmptySemigroupComplement",
            Error::GenusTooSmall { .. } => "GenusTooSmall",
            Error::MalformedGapSet(_) => "MalformedGapSet",
            Error::NotPFSemigroup => "NotPFSemigroup",
            Error::NotPFShape(_) => "NotPFShape",
            Error::PasteConditionViolated { .. } => "PasteConditionViolated",
            Error::PreconditionUnverified(_) => "PreconditionUnverified",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
