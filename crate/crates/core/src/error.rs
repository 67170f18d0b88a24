use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of the gamma function at {0}")]
    GammaPole(f64),
    #[error("division by zero in Moebius action (denominator {0:e})")]
    MoebiusPole(f64),
    #[error("{what} is at a pole")]
    AtPole { what: &'static str },
    #[error("argument {z} lies on the branch cut [1, inf)")]
    BranchCut { z: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("series did not converge after {terms} terms at |z| = {modulus}")]
    NoConvergence { terms: usize, modulus: f64 },
    #[error("quadrature did not converge (last estimate change {0:e})")]
    Quadrature(f64),
    #[error("matrix is defective: repeated eigenvalue with a one-dimensional eigenspace")]
    Defective,
    #[error("matrix is singular")]
    Singular,
    #[error("determinant must be 1, got {0}")]
    Determinant(i64),
    #[error("no conjugator found: {0}")]
    NoSolution(String),
    #[error("imaginary part {0} is too small, reduce the point first")]
    LowImaginaryPart(f64),
    #[error("Fourier extraction aliasing: coefficient change {0:e} between sample sizes")]
    Aliasing(f64),
    #[error("unsupported transformation element: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
