use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid rigged configuration: {0}")]
    InvalidConfiguration(String),
    /// A map was applied to something of the wrong shape, e.g. `lh` on a path
    /// whose first rectangle is not a single box.
    #[error("shape precondition of {map} violated: {detail}")]
    Shape { map: &'static str, detail: String },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    /// The input is well formed but lies outside the domain of an inverse map.
    #[error("{map} is not defined here: {detail}")]
    Domain { map: &'static str, detail: String },
    #[error("undefined: {0}")]
    Undefined(Undefined),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Partial operations that legitimately have no value on a given input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Undefined {
    /// Filling the vacated corner with 1 breaks column strictness.
    NotInDomRho,
    /// No singular string of admissible length at the given level.
    RhoBarIllDefined { level: usize },
    /// A crystal operator that was required to act returned nothing.
    CrystalOperator { index: usize },
}

impl Undefined {
    pub fn reason(&self) -> &'static str {
        match self {
            Undefined::NotInDomRho => "not-in-dom-rho",
            Undefined::RhoBarIllDefined { .. } => "rho-bar-ill-defined",
            Undefined::CrystalOperator { .. } => "crystal-operator-undefined",
        }
    }
}

impl fmt::Display for Undefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Undefined::NotInDomRho => f.write_str("not-in-dom-rho"),
            Undefined::RhoBarIllDefined { level } => {
                write!(f, "rho-bar-ill-defined (no admissible singular string at level {level})")
            }
            Undefined::CrystalOperator { index } => {
                write!(f, "crystal-operator-undefined (index {index})")
            }
        }
    }
}

impl From<Undefined> for Error {
    fn from(u: Undefined) -> Self {
        Error::Undefined(u)
    }
}
