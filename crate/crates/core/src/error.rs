use thiserror::Error;

use crate::exact::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("denominator still vanishes at 1 after cancelling common factors")]
    PoleAtOne,

    #[error("denominator vanishes identically on the diagonal u = v")]
    DiagonalPole,

    #[error("denominator vanishes at 0 and cannot be shifted away")]
    NotExpandable,

    #[error("expected a polynomial in {expected:?}, found {found:?}")]
    WrongRing { expected: Ring, found: Ring },

    #[error("genus {g} outside the supported range (need g >= {min})")]
    GenusOutOfRange { g: u32, min: u32 },

    #[error("{what} did not divide out to a polynomial")]
    FormulaNotPolynomial { what: String },

    #[error("{what} has non-integral coefficient in degree {degree}")]
    NonIntegral { what: String, degree: usize },

    #[error("{what} has negative Betti number in degree {degree}")]
    NegativeBetti { what: String, degree: usize },

    #[error("{what} has degree {found}, expected {expected}")]
    WrongDegree {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("two assemblies of {what} disagree")]
    FormulaMismatch { what: String },

    #[error("Gr({k}, {n}) is not a Grassmannian")]
    InvalidGrassmannian { k: u32, n: u32 },

    #[error("the open stratum has no boundary formula; use the smooth part")]
    EmptyStratum,

    #[error("malformed serialized value: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
