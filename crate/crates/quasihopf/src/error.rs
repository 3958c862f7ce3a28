use alloc::string::String;
use core::fmt;

use crate::report::Report;

/// Errors produced by presentation constructors and the derived
/// computations.
///
/// Failures of the verified laws themselves are not errors: the verify
/// functions return a [`Report`](crate::report::Report) listing them.
/// `Error` is reserved for malformed input (shapes, parsing, non-group
/// tables) and for computations whose preconditions a genuine quasi-Hopf
/// presentation would guarantee (a singular antipode, an integral space
/// of the wrong dimension, a non-invertible derivative).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Dimension or shape mismatch in input data.
    Shape(String),
    /// Requested prime field modulus is not prime.
    NotPrime(u64),
    /// A scalar literal could not be parsed in the given field.
    ParseScalar(String),
    /// Zero denominator in a rational literal.
    ZeroDenominator,
    /// A map or element that must be invertible is not.
    Singular(&'static str),
    /// A multiplication table has no (two-sided) unit.
    NoUnit,
    /// The given table does not describe a group.
    NotAGroup(String),
    /// The given values fail the normalized cocycle identity.
    BadCocycle(String),
    /// A construction that needs an invertible 2 in the ground field.
    CharacteristicTwo,
    /// Integral space dimension differs from one.
    IntegralDimension { side: &'static str, dim: usize },
    /// A vector that must be a scalar multiple of another is not.
    NotProportional(&'static str),
    /// A functional that must be a Frobenius homomorphism is degenerate.
    Degenerate(&'static str),
    /// Operation requires a Hopf presentation (trivial associator,
    /// alpha = beta = 1).
    NotHopf(String),
    /// An element escapes the subalgebra span.
    NotInSubalgebra(String),
    /// A theorem hypothesis fails on the given input.
    Hypothesis(String),
    /// An internal identity that holds for every valid presentation
    /// failed; the input is inconsistent.
    Inconsistent(String),
    /// A constructed presentation failed the axiom suite.
    Verification(Report),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(msg) => write!(f, "shape mismatch: {msg}"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ParseScalar(s) => write!(f, "cannot parse scalar {s:?}"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::Singular(what) => write!(f, "{what} is singular"),
            Error::NoUnit => write!(f, "multiplication table has no unit"),
            Error::NotAGroup(msg) => write!(f, "not a group table: {msg}"),
            Error::BadCocycle(msg) => write!(f, "invalid 3-cocycle: {msg}"),
            Error::CharacteristicTwo => write!(f, "construction needs 2 invertible in the field"),
            Error::IntegralDimension { side, dim } => {
                write!(f, "{side} integral space has dimension {dim}, expected 1")
            }
            Error::NotProportional(what) => write!(f, "{what} is not a scalar multiple"),
            Error::Degenerate(what) => write!(f, "{what} is degenerate"),
            Error::NotHopf(msg) => write!(f, "not a Hopf presentation: {msg}"),
            Error::NotInSubalgebra(msg) => write!(f, "element escapes subalgebra: {msg}"),
            Error::Hypothesis(msg) => write!(f, "theorem hypothesis fails: {msg}"),
            Error::Inconsistent(msg) => write!(f, "inconsistent presentation: {msg}"),
            Error::Verification(report) => {
                write!(f, "constructed presentation fails verification: {report}")
            }
        }
    }
}
