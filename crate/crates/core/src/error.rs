use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid unit: monomial coefficient must be nonzero")]
    InvalidUnit,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("non-integral exponent: half-exponent map applied to an odd exponent")]
    NonIntegralExponent,
    #[error("odd M-exponent {0}")]
    OddMExponent(i64),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{what} index {index} out of range")]
    IndexOutOfRange { what: &'static str, index: i64 },
    #[error("denominator did not clear for {form}_{n}")]
    DenominatorNotCleared { form: char, n: i64 },
    #[error("torus knot ({name}): A-form not defined by the family tables")]
    TorusKnot { n: i64, name: &'static str },
    #[error("R_0 branch mismatch between the P- and Q-normalizations")]
    BranchMismatch,
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polygons have inconsistent vertex counts ({0} vs {1})")]
    InconsistentVertexCount(usize, usize),
    #[error("underdetermined fit: residue class {residue} has {have} samples, need {need}")]
    Underdetermined { residue: i64, have: usize, need: usize },
    #[error("vertex list is not strictly convex")]
    NotStrictlyConvex,
}
