use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("length mismatch: need at least {needed} second indices, got {got}")]
    LengthMismatch { needed: usize, got: usize },
    #[error("not straightenable: tied keys with different second indices at rows {0} and {1}")]
    NotStraightenable(usize, usize),
    #[error("no value assigned to a_{0}")]
    MissingAssignment(i64),
    #[error("barred entry at ({0},{1}) has no weight")]
    BarredEntryHasNoWeight(usize, usize),
    #[error("not in span: {0}")]
    NotInSpan(String),
    #[error("unstable at chosen n = {0}")]
    UnstableAtN(usize),
    #[error("unsupported hypothesis: {0}")]
    UnsupportedHypothesis(String),
    #[error("tableau is good")]
    TableauIsGood,
    #[error("nu is good (horizontal strip)")]
    NuIsGood,
    #[error("involution invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
