use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("moduli differ: {0} and {1}")]
    ModulusMismatch(u64, u64),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("polynomial is not symmetric of even degree")]
    NotSymmetric,
    #[error("trace polynomial vanishes at +2 or -2")]
    BoundaryRoot,
    #[error("resultant is zero: the polynomials share a rational factor")]
    ResultantZero,
    #[error("resultant cofactor {0} could not be factored")]
    UnresolvedCofactor(BigUint),
    #[error("parity vectors have different index sets ({0} vs {1})")]
    DomainMismatch(usize, usize),
    #[error("no real local data matches the signature")]
    Infeasible,
    #[error("factor Phi({0}) has a ramified conductor")]
    RamifiedCyclotomic(u64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("polynomial has a repeated factor")]
    NotSquareFree,
    #[error("Alexander polynomial is not unramified")]
    NotUnramified,
    #[error("bad torus knot: {0}")]
    BadSpec(String),
    #[error("invalid factor: {0}")]
    InvalidFactor(String),
    #[error("Milnor profile does not match the signature: {0}")]
    ProfileMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
