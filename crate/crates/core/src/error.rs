use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{op}: expected constant term {expected}, found {found}")]
    ConstantTerm {
        op: &'static str,
        expected: String,
        found: String,
    },

    #[error("fixed-point iteration is not contractive: coefficient of degree {degree} still changes")]
    NonContraction { degree: usize },

    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("{what} = {value} exceeds the safety limit {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("characteristic polynomial methods disagree for n = {n}: via_tau = {via_tau}, triangular = {triangular}")]
    MethodDisagreement {
        n: usize,
        via_tau: String,
        triangular: String,
    },

    #[error("{check} fails at degree {degree}: residual {residual}")]
    Residual {
        check: String,
        degree: usize,
        residual: String,
    },

    #[error("elements are not comparable: {0}")]
    NotComparable(String),

    #[error("vertex sets differ: {left} vs {right}")]
    VertexMismatch { left: usize, right: usize },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },
}
