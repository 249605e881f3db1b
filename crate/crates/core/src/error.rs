use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix {0} is not unimodular (|det| != 1)")]
    NotUnimodular(String),
    #[error("matrix {0} is not in SL(2,Z) (det != 1)")]
    NotSL2(String),
    #[error("matrix {0} is not Anosov (|trace| <= 2)")]
    NotAnosov(String),
    #[error("({0}, {1}) is not a primitive integer vector")]
    NotPrimitive(String, String),
    #[error("|trace| = {0} is too small, need |trace| >= 3")]
    TraceTooSmall(String),
    #[error("matrices do not commute")]
    NotCommuting,
    #[error("matrix {0} is not of the form [[m,-1],[1,0]] with |m| >= 3")]
    NotStandardForm(String),
    #[error("matrix {0} is not of the form +-L^n (det = {1})")]
    NotExpressible(String, String),
    #[error("conjugator does not carry the monodromy to standard form")]
    InconsistentWitness,
    #[error("axis of {0} is vertical (c = 0)")]
    VerticalAxis(String),
    #[error("point is not in the upper half plane")]
    NotUpperHalfPlane,
    #[error("coordinates live in different quadratic fields")]
    IncompatibleFields,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("palette error: {0}")]
    Palette(String),
}

pub type Result<T> = std::result::Result<T, Error>;
