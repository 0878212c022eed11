use alloc::string::String;
use core::fmt;

/// Errors raised by the library. Every variant carries enough context to
/// name the offending input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Evaluation of a negative power at zero.
    DivisionByZero,
    /// A rational function has a pole at the requested specialization.
    Pole { at: String },
    /// Exact division left a remainder.
    NotDivisible { remainder: String },
    /// An input exceeds an enumeration guard.
    SizeGuard {
        what: &'static str,
        limit: u64,
        got: u64,
    },
    /// Malformed textual input.
    Parse(String),
    /// An edge set is not closed under intervals.
    NotIndifference(String),
    /// A Schröder path is not tall, or not a valid path at all.
    InvalidPath(String),
    /// A polynomial is not constant on symmetric-group orbits.
    NotSymmetric,
    /// The operation is not defined in the given basis.
    UnsupportedBasis(&'static str),
    /// A basis-change system turned out singular.
    Singular,
    /// Two operands live over different (n, q).
    Mismatch(String),
    /// Any other precondition violation.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Pole { at } => write!(f, "pole at t = {at}"),
            Error::NotDivisible { remainder } => {
                write!(f, "inexact division, remainder {remainder}")
            }
            Error::SizeGuard { what, limit, got } => {
                write!(f, "size guard: {what} is {got}, limit {limit}")
            }
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::NotIndifference(s) => write!(f, "not an indifference edge set: {s}"),
            Error::InvalidPath(s) => write!(f, "invalid path: {s}"),
            Error::NotSymmetric => write!(f, "polynomial is not symmetric"),
            Error::UnsupportedBasis(b) => write!(f, "operation unsupported in basis {b}"),
            Error::Singular => write!(f, "singular basis-change system"),
            Error::Mismatch(s) => write!(f, "mismatched operands: {s}"),
            Error::Invalid(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, got: u64, limit: u64) -> Result<()> {
    if got > limit {
        Err(Error::SizeGuard { what, limit, got })
    } else {
        Ok(())
    }
}
