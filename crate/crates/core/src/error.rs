//! Error type shared by the whole kernel.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Two monomials or elements from rings with different variable counts.
    VarCountMismatch { left: usize, right: usize },
    /// The requested characteristic is not a prime in the supported range.
    BadPrime(u64),
    /// A homogeneous-degree precondition failed.
    DegreeMismatch { expected: i64, found: i64 },
    /// An element mixes terms of different total degrees.
    NotHomogeneous,
    /// A term coordinate exceeds the rank of its free module.
    CoordOutOfRange { coord: usize, rank: usize },
    /// Adjacent maps of a complex do not compose (source/target twists differ).
    NotComposable { position: usize },
    /// A differential still contains a unit entry where a minimal complex was required.
    NotMinimal { position: usize },
    /// An operation on a Betti table needs at least one entry.
    EmptyTable,
    /// Schreyer syzygy extraction was handed a basis without provenance trails.
    MissingProvenance,
    /// A construction hypothesis failed; the clause name is carried along.
    HypothesisFailed {
        clause: &'static str,
        detail: String,
    },
    /// Text input could not be parsed.
    Parse(String),
    /// A cooperative deadline expired inside a long-running computation.
    BudgetExceeded,
    /// The syzygy tower did not terminate within the allowed length.
    TooLong { max_length: usize },
    /// Violated internal invariant; indicates a bug, not bad input.
    Internal(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::VarCountMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            AlgebraError::BadPrime(p) => write!(f, "{p} is not a prime in [2, 2^31)"),
            AlgebraError::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            AlgebraError::NotHomogeneous => write!(f, "element is not homogeneous"),
            AlgebraError::CoordOutOfRange { coord, rank } => {
                write!(f, "coordinate {coord} out of range for rank {rank}")
            }
            AlgebraError::NotComposable { position } => {
                write!(f, "maps at position {position} do not compose")
            }
            AlgebraError::NotMinimal { position } => {
                write!(
                    f,
                    "differential {position} has a unit entry; complex is not minimal"
                )
            }
            AlgebraError::EmptyTable => write!(f, "empty Betti table"),
            AlgebraError::MissingProvenance => {
                write!(f, "Groebner basis has no provenance trails")
            }
            AlgebraError::HypothesisFailed { clause, detail } => {
                write!(f, "hypothesis clause {clause} failed: {detail}")
            }
            AlgebraError::Parse(msg) => write!(f, "parse error: {msg}"),
            AlgebraError::BudgetExceeded => write!(f, "computation budget exceeded"),
            AlgebraError::TooLong { max_length } => {
                write!(f, "resolution did not terminate within {max_length} steps")
            }
            AlgebraError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for AlgebraError {}
