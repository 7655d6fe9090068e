use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of the gamma function at a nonpositive integer")]
    PoleAtNonpositiveInteger,
    #[error("series did not converge within {terms} terms")]
    NoConvergence { terms: usize },
    #[error("argument on cut [1,∞)")]
    OnCut,
    #[error("parameter pole: {0}")]
    ParameterPole(&'static str),
    #[error("parameter outside of domain: {0}")]
    ParameterDomain(&'static str),
    #[error("argument outside of domain: {0}")]
    DomainError(&'static str),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point is not on the (complex) de Sitter space")]
    NotOnManifold,
    #[error("pair is not spacelike")]
    NotSpacelike,
    #[error("point lies on the light cone")]
    OnLightcone,
    #[error("integral does not converge for these parameters")]
    ConvergenceDomain,
    #[error("U matrix is numerically singular")]
    SingularU,
    #[error("eigenspace is not one-dimensional")]
    DegenerateEigenvector,
    #[error("index {0} out of range")]
    IndexOutOfRange(i64),
    #[error("spectral measure is not symmetric")]
    NotSymmetric,
}

pub type Result<T> = std::result::Result<T, Error>;
