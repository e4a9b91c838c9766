use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("gamma pole at {0}")]
    Pole(Complex64),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("argument outside series domain: {0}")]
    ConvergenceDomain(String),
    #[error("series failed to converge after {0} terms")]
    NoConvergence(usize),
    #[error("singular matrix: pivot {pivot} at step {step}")]
    SingularMatrix { step: usize, pivot: f64 },
    #[error("path passes too close to a fixed singularity: {0}")]
    PathSingularity(String),
    #[error("lost the sigma'' branch at t = {0}")]
    BranchLoss(Complex64),
    #[error("outside trust region: {0}")]
    TrustRegion(String),
    #[error("quadrature order too low: routes differ by {0:e}")]
    OrderTooLow(f64),
    #[error("theta set does not match the parameter vector: {0}")]
    CaseMismatch(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("connection matrix is not invertible")]
    NonInvertibleC,
    #[error("step size underflow at t = {0}")]
    StepUnderflow(Complex64),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

impl Error {
    /// Exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Pole(_) | Error::Degenerate(_) | Error::CaseMismatch(_) => 3,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
