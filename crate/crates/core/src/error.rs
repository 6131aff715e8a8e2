use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Generators of a numerical semigroup share a common factor.
    NotCoprime { gcd: u32 },
    /// Semigroup generators must be positive and non-empty.
    EmptyGenerators,
    /// An Apery set was requested for a modulus that is not a positive member.
    NotMember { value: u32 },
    /// Cancellation pushed a valuation past the known precision.
    PrecisionExhausted { truncation: u32 },
    /// The zero module cannot be represented.
    ZeroModule,
    /// An ideal generator is not an element of the ring.
    NotInRing { exponent: u32 },
    /// The ideal is not primary to the maximal ideal.
    NotPrimary,
    /// `length_quotient(M, N)` called with `N` not contained in `M`.
    NotContained,
    /// A sequence that is guaranteed to stabilize did not do so below its cap.
    NonStabilizing { what: &'static str, limit: u32 },
    /// No superficial element was found within the trial budget.
    SearchExhausted { trials: u32 },
    /// The reduction-number scan passed its cap.
    ScanExhausted { limit: u32 },
    /// A structural identity that must hold was violated.
    InvariantViolation(String),
    /// A quantity required by an evaluation is missing.
    MissingInvariant(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotCoprime { gcd } => write!(f, "semigroup generators have gcd {gcd}"),
            Error::EmptyGenerators => f.write_str("semigroup needs at least one positive generator"),
            Error::NotMember { value } => write!(f, "{value} is not a positive semigroup member"),
            Error::PrecisionExhausted { truncation } => {
                write!(f, "precision exhausted at truncation order {truncation}")
            }
            Error::ZeroModule => f.write_str("the zero module is not allowed"),
            Error::NotInRing { exponent } => {
                write!(f, "ideal generator has exponent {exponent} outside the semigroup")
            }
            Error::NotPrimary => f.write_str("ideal is not primary to the maximal ideal"),
            Error::NotContained => f.write_str("submodule is not contained in module"),
            Error::NonStabilizing { what, limit } => {
                write!(f, "{what} did not stabilize below {limit}")
            }
            Error::SearchExhausted { trials } => {
                write!(f, "no superficial element found in {trials} trials")
            }
            Error::ScanExhausted { limit } => write!(f, "reduction number exceeds {limit}"),
            Error::InvariantViolation(msg) => write!(f, "invariant violation: {msg}"),
            Error::MissingInvariant(name) => write!(f, "missing invariant `{name}`"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
