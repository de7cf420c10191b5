use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("exponent list must be non-increasing with entries >= 1: {0:?}")]
    NotSorted(Vec<u32>),
    #[error("both factor lists must be non-empty")]
    EmptyFactorList,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{what} has size {size}, above the configured cap {cap}")]
    TooLarge {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("rank {r} out of range for {m}x{n} matrices")]
    RankOutOfRange { r: usize, m: usize, n: usize },
    #[error("invalid subgroup form: {0}")]
    InvalidForm(String),
    #[error("not a subgroup of the ambient group: {0}")]
    NotASubgroup(String),
    #[error("element or cocycle belongs to a different group")]
    GroupMismatch,
    #[error("construction requires every y_j to have order p")]
    NotElementaryG2,
    #[error("cocycle matrix is not a generalized permutation pattern: {0}")]
    PatternMismatch(String),
    #[error("representation does not satisfy the cocycle: {0}")]
    CocycleMismatch(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
