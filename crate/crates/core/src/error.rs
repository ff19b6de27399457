use thiserror::Error;

/// Errors raised by constructions and verifications in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: &'static str },

    #[error("matrices are not proportional: {0}")]
    NotProportional(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartanMatrix(String),

    #[error("node {node} is not a one-grading: highest root coefficient is {coefficient}")]
    NotOneGraded { node: usize, coefficient: i64 },

    #[error("unsupported root system type {0}")]
    UnsupportedType(String),

    #[error("weight {0:?} is not dominant for the Levi factor")]
    NonDominant(Vec<i64>),

    #[error("modular ranks disagree across primes: {0}")]
    ModularDisagreement(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix text parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
