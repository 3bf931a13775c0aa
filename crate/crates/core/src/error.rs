use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("exponent {numerator}/2 is not an integer for partition {partition}")]
    NonIntegralExponent { partition: String, numerator: i64 },
    #[error("index k = {k} outside 1..={max} (m = {m})")]
    IndexOutOfRange { k: u32, m: u32, max: u32 },
    #[error("series constant term is zero")]
    NonUnitSeries,
    #[error("invalid distribution parameters: {0}")]
    InvalidParams(String),
    #[error("sampling support is empty")]
    EmptySupport,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
