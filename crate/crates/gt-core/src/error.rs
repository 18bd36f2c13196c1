//! Shared error type for all modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by group-theoretic computations.
///
/// `CapExceeded` is the resource-limit signal: it never means "the answer is
/// infinite", only that the answer was not reached within the configured cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input (cycles, words, cyclotomic literals).
    Parse(String),
    /// Permutation degrees of the operands do not match.
    DegreeMismatch { expected: u32, found: u32 },
    /// A resource cap was exceeded before the computation finished.
    CapExceeded { what: &'static str, cap: u64 },
    /// The claimed subgroup is not contained in the group.
    NotASubgroup,
    /// The group does not act transitively where transitivity is required.
    NotTransitive,
    /// The group is not solvable.
    NotSolvable,
    /// An element is not a member of the group at hand.
    NotInGroup,
    /// The given number is not prime.
    NotPrime(u64),
    /// A structural precondition on the input failed (with a reason).
    Invalid(String),
    /// The polycyclic presentation is not consistent where consistency is required.
    Inconsistent,
    /// An internal invariant was violated; indicates a bug, not bad input.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::CapExceeded { what, cap } => {
                write!(f, "cap exceeded: {what} (limit {cap})")
            }
            Error::NotASubgroup => write!(f, "not a subgroup"),
            Error::NotTransitive => write!(f, "group is not transitive"),
            Error::NotSolvable => write!(f, "group is not solvable"),
            Error::NotInGroup => write!(f, "element is not in the group"),
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
            Error::Inconsistent => write!(f, "polycyclic presentation is inconsistent"),
            Error::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
