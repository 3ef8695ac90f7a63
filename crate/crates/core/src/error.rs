use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials live in {left} and {right} variables")]
    VarCountMismatch { left: usize, right: usize },
    #[error("ring and dual polynomials mixed")]
    SideMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("term of degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("linear forms are not linearly independent")]
    DependentForms,
    #[error("matrix is singular")]
    Singular,
    #[error("quotient is not Artinian up to degree {cap}")]
    NotArtinian { cap: u32 },
    #[error("no Artinian reduction found after {attempts} attempts")]
    NoReduction { attempts: usize },
    #[error("generators are not coprime")]
    NonCoprime,
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
