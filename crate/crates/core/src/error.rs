use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live over different variable tables")]
    VarTableMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable table: {0}")]
    InvalidVarTable(String),

    #[error("exponent {exponent} of `{var}` is not admissible")]
    InadmissibleExponent { var: String, exponent: i32 },

    #[error("cannot substitute into a negative power of `{0}`: the image is not an invertible monomial")]
    InadmissibleSubstitution(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("json: {0}")]
    Json(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("coordinate change is not triangular: {0}")]
    NotTriangular(String),

    #[error("structure constants are not integrable: {0}")]
    Integrability(String),

    #[error("rewriting did not terminate: {0}")]
    Reduction(String),

    #[error("inconsistent system: {0}")]
    Inconsistent(String),

    #[error("not a perfect square: {0}")]
    NotPerfectSquare(String),

    #[error("invalid lambda: {0}")]
    InvalidLambda(String),

    #[error("closed form and recursion disagree: {0}")]
    Mismatch(String),
}
