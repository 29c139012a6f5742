use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: size {n} exceeds the limit {cap}")]
    SizeLimit { what: &'static str, n: usize, cap: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("element is not central: {first} has coefficient {first_coeff} but its conjugate {second} has {second_coeff}")]
    NonCentral {
        first: String,
        first_coeff: String,
        second: String,
        second_coeff: String,
    },

    #[error("singular parameter: coefficient r_{j} is undefined")]
    Singular { j: i64 },

    #[error("repeated value in {0}: Vandermonde determinant vanishes")]
    VandermondeZero(&'static str),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("series has non-unit constant term")]
    NonUnitConstant,

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("output error: {0}")]
    Output(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("incompatible series parameters: {0} vs {1}")]
    IncompatibleVars(String, String),
}
