//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the library.  Every variant corresponds to a violated
/// precondition or malformed input; internal consistency violations (things
/// the underlying theorems guarantee) panic instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrError {
    /// An index into the vectors of an arrangement is out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// Matrix or vector dimensions do not match.
    ShapeMismatch(String),
    /// Requested exterior/compound degree is outside `0..=min(rows, cols)`.
    DegreeOutOfRange { degree: usize, max: usize },
    /// One subspace is not contained in another where containment is required.
    NotContained(String),
    /// A named operation precondition does not hold (with the reason).
    Precondition(String),
    /// Unknown complex variant or theory selector.
    InvalidVariant(String),
    /// Input text could not be parsed.
    Parse(String),
}

impl fmt::Display for ArrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrError::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for {len} vectors")
            }
            ArrError::ShapeMismatch(s) => write!(f, "shape mismatch: {s}"),
            ArrError::DegreeOutOfRange { degree, max } => {
                write!(f, "degree {degree} out of range (max {max})")
            }
            ArrError::NotContained(s) => write!(f, "containment violated: {s}"),
            ArrError::Precondition(s) => write!(f, "precondition violated: {s}"),
            ArrError::InvalidVariant(s) => write!(f, "invalid variant: {s}"),
            ArrError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl core::error::Error for ArrError {}
