use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("the zero vector is not a projective point")]
    ZeroVector,

    #[error("point {0} is not on the surface")]
    NotOnSurface(String),

    #[error("point {0} is not on V (it lies on the double line or off the surface)")]
    NotOnV(String),

    #[error("invalid scroll point: {0}")]
    InvalidScrollPoint(String),

    #[error("invalid line index ({lambda}, {mu}): need gcd 1 and mu >= 1")]
    InvalidLineIndex { lambda: i64, mu: i64 },

    #[error("invalid line parameter ({tau0}, {tau1}): need a primitive pair with tau0 != 0")]
    InvalidLineParam { tau0: i64, tau1: i64 },

    #[error("invalid height bound: {0}")]
    InvalidHeight(String),

    #[error("B^2 = {b_squared} exceeds the direct-search cap {cap}; use count_by_lines")]
    DirectCapExceeded { b_squared: String, cap: u64 },

    #[error("coordinate does not fit in a machine integer: {0}")]
    Overflow(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("truncation too small: J = {given}, need J >= {required}")]
    TruncationTooSmall { given: u32, required: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("quadrature failed to converge: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
