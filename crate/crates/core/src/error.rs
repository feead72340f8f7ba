use thiserror::Error;

use crate::sets::ElementSet;

#[derive(Debug, Error)]
pub enum Error {
    #[error("element {element} outside ground set [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ground set size {0} exceeds the supported maximum of {max}", max = crate::sets::MAX_ELEMENTS)]
    UniverseTooLarge(usize),

    #[error("incompatible universes: n = {left} vs n = {right}")]
    IncompatibleUniverses { left: usize, right: usize },

    #[error("family has no members")]
    NoMembers,

    #[error("restriction requires A ⊆ B (A = {a}, B = {b})")]
    NotSubset { a: ElementSet, b: ElementSet },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("family is not intersecting: {0} and {1} are disjoint")]
    NotIntersecting(ElementSet, ElementSet),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("family has an independent set of size {size}: {witness}")]
    IndependentSet { size: usize, witness: ElementSet },

    #[error("set {0} is not independent in the graph")]
    NotIndependent(ElementSet),

    #[error("budget exhausted: {0}")]
    Inconclusive(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
