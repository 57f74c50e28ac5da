use thiserror::Error;

use crate::bigpoly::MPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("exact division failed: divisor does not divide dividend")]
    NonDivisible,
    #[error("polynomial is not monic in the requested variable")]
    NonMonic,
    #[error("zero polynomial where a nonzero polynomial is required")]
    ZeroPolynomial,
    #[error("{0} is not a perfect square")]
    NotPerfectSquare(String),
    #[error("negative input {0} to an integer square root")]
    NegativeInput(String),
    #[error("polynomial is not expressible in K = a^2+3a+9; residual coefficient of a: {residual}")]
    NotExpressible { residual: MPoly },
    #[error("polynomial is not the square of a polynomial")]
    NotAPolynomialSquare,
    #[error("d = {0} is not square-free")]
    NotSquareFree(u64),
    #[error("d must be a positive integer")]
    NonPositiveD,
    #[error("operands belong to different quadratic rings (d = {0} vs d = {1})")]
    RingMismatch(u64, u64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("index cross-check failed: I^2*|D_O| = {lhs} but |disc(P*Q)| = {rhs}")]
    CrossCheckFailed { lhs: String, rhs: String },
    #[error("could not enumerate integer roots: {0}")]
    RootSearch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("serialization failed: {0}")]
    Serialize(String),
}
