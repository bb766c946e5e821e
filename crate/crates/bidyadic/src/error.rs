use core::fmt;

use crate::dyadic::Space;

/// Error type shared by all kernel operations.
///
/// Grade and space violations are programming-contract errors surfaced as
/// values so callers (in particular the CLI) can map them to diagnostics;
/// `NoInverse` and `NoWave` are honest mathematical outcomes and carry their
/// certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A wedge product would exceed grade 4.
    GradeOverflow { left: u8, right: u8 },
    /// A contraction or hook was asked to remove more slots than exist.
    GradeUnderflow { big: u8, small: u8 },
    /// Two graded values were expected to have matching grades.
    GradeMismatch { expected: u8, found: u8 },
    /// A dyadic operation was applied between incompatible spaces.
    SpaceMismatch { expected: Space, found: Space },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A matrix had the wrong shape for the spaces it was paired with.
    Shape { expected: (usize, usize), found: (usize, usize) },
    /// Two internal computation routes that must agree disagreed.  This can
    /// only fire if the frozen sign-convention tables are edited
    /// inconsistently; it is never reachable from user input.
    ConventionBug(&'static str),
    /// The object is exactly singular; `rank` is the exact rank certificate.
    NoInverse { rank: usize },
    /// The dispersion dyadic admits no nontrivial plane-wave polarization.
    NoWave,
    /// A documented precondition of the operation does not hold.
    Precondition(&'static str),
    /// The operation's defining hypothesis fails for this input, so the
    /// question it answers is not posed (distinct from a shape or
    /// precondition violation: the input is well-formed but out of scope).
    NotApplicable(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GradeOverflow { left, right } => {
                write!(f, "grade overflow: {left} + {right} exceeds 4")
            }
            Error::GradeUnderflow { big, small } => {
                write!(f, "grade underflow: cannot remove grade {small} from grade {big}")
            }
            Error::GradeMismatch { expected, found } => {
                write!(f, "grade mismatch: expected {expected}, found {found}")
            }
            Error::SpaceMismatch { expected, found } => {
                write!(f, "space mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {rows}x{cols}")
            }
            Error::Shape { expected, found } => {
                write!(
                    f,
                    "matrix shape {}x{} does not match spaces ({}x{})",
                    found.0, found.1, expected.0, expected.1
                )
            }
            Error::ConventionBug(msg) => {
                write!(f, "internal convention tables are inconsistent: {msg}")
            }
            Error::NoInverse { rank } => {
                write!(f, "no inverse exists (exact rank {rank})")
            }
            Error::NoWave => write!(f, "no nontrivial plane-wave polarization exists"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
