use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constraint `{0}` is enabled but no k was given")]
    MissingK(&'static str),
    #[error("invalid class spec: {0}")]
    InvalidSpec(String),
    #[error("oracle budget exceeded: {dimension} = {value} > {limit}")]
    BudgetExceeded { dimension: &'static str, value: u64, limit: u64 },
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("oracle-only class `{0}`; use oracle command")]
    OracleOnly(String),
    #[error("class `{0}` requires --k")]
    MissingClassK(String),
    #[error("{value} is not divisible by {m}!")]
    NotDivisible { value: String, m: usize },
    #[error("table too shallow: need ({m},{n})")]
    InsufficientDepth { m: usize, n: usize },
    #[error("memo lacks omega({m},{n})")]
    MissingMemo { m: usize, n: usize },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
