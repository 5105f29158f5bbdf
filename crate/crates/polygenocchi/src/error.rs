//! Error type shared by the whole engine.
//!
//! Domain errors (a pole, a non-invertible denominator, a collapsed basis)
//! are kept distinct from usage errors (unknown names, bad text) so the CLI
//! can map them to different exit codes.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Series division requires an invertible constant term in the denominator.
    NonInvertibleConstantTerm,
    /// Series composition requires the inner series to have zero constant term.
    InnerConstantNotZero,
    /// geom_power_sum(z, m) has a pole at z = 1; upstream this is lambda = u.
    PoleAtOne,
    /// Triangle access with j > n.
    IndexOutOfRange { n: usize, j: usize },
    /// Whitney change of basis with m = 0: the target basis collapses.
    DegenerateBasis,
    /// Verification suite name not in the registry.
    UnknownSuite(String),
    /// Family name not in the registry.
    UnknownFamily(String),
    /// Text that does not match the rational grammar `[+-]?digits[/digits]`.
    InvalidRational(String),
    /// A reduction item was invoked with parameters that violate its restriction.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonInvertibleConstantTerm => {
                write!(f, "series division by a non-invertible constant term")
            }
            Error::InnerConstantNotZero => {
                write!(f, "series composition with nonzero inner constant term")
            }
            Error::PoleAtOne => write!(f, "geometric power sum pole at z = 1 (lambda = u)"),
            Error::IndexOutOfRange { n, j } => {
                write!(f, "triangle index out of range: j = {j} > n = {n}")
            }
            Error::DegenerateBasis => {
                write!(f, "Whitney basis degenerates at m = 0 (general r)")
            }
            Error::UnknownSuite(s) => write!(f, "unknown verification suite: {s}"),
            Error::UnknownFamily(s) => write!(f, "unknown family: {s}"),
            Error::InvalidRational(s) => write!(f, "invalid rational literal: {s:?}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
