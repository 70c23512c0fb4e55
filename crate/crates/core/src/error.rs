//! Shared error type.
//!
//! Every fallible operation in the crate reports one of these variants.
//! [`Error::code`] yields the stable machine-readable string used in CLI
//! error objects.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input shapes violate an operation's contract (ragged matrix,
    /// point count not matching rank·genus, and so on).
    DimensionMismatch { detail: String },
    /// No label subset is a projective frame in both configurations, so
    /// equivalence cannot be decided by frame normalization.
    InsufficientGeneralPosition,
    /// A coordinate matrix has deficient rank where full rank is required.
    DegenerateConfiguration { detail: String },
    /// A kernel-basis row is identically zero, so the corresponding point
    /// of the transformed configuration is undefined.
    RowDegenerate { label: usize },
    /// A polynomial or map was applied to coordinates of the wrong length.
    ArityMismatch { expected: usize, found: usize },
    /// All partial derivatives vanish at the point, so the gradient map
    /// is undefined there.
    SingularPoint,
    /// A sampled evaluation matrix did not reach the required rank.
    RankDeficiency { expected: usize, found: usize },
    /// The space of cubics through the samples is not one-dimensional.
    NonuniqueCubic { dimension: usize },
    /// The space of quartics through the samples is not one-dimensional.
    NonuniqueQuartic { dimension: usize },
    /// Support points collide, so no kernel presentation exists.
    SupportOnBigDiagonal,
    /// The (rank, genus) pair is outside the implemented case table.
    UnsupportedCase { detail: String },
    /// A projective point must have at least one nonzero coordinate.
    ZeroPoint,
}

impl Error {
    /// Stable machine-readable code, used verbatim in CLI error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension mismatch",
            Error::InsufficientGeneralPosition => "insufficient general position",
            Error::DegenerateConfiguration { .. } => "degenerate configuration",
            Error::RowDegenerate { .. } => "row degenerate",
            Error::ArityMismatch { .. } => "arity mismatch",
            Error::SingularPoint => "singular point",
            Error::RankDeficiency { .. } => "rank deficiency",
            Error::NonuniqueCubic { .. } => "nonunique cubic",
            Error::NonuniqueQuartic { .. } => "nonunique quartic",
            Error::SupportOnBigDiagonal => "support on big diagonal",
            Error::UnsupportedCase { .. } => "unsupported case",
            Error::ZeroPoint => "zero point",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { detail } => write!(f, "dimension mismatch: {detail}"),
            Error::InsufficientGeneralPosition => {
                write!(f, "no common frame subset in general position")
            }
            Error::DegenerateConfiguration { detail } => {
                write!(f, "degenerate configuration: {detail}")
            }
            Error::RowDegenerate { label } => {
                write!(f, "kernel basis row for point {label} is zero")
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} coordinates, found {found}")
            }
            Error::SingularPoint => write!(f, "all partial derivatives vanish at the point"),
            Error::RankDeficiency { expected, found } => {
                write!(f, "evaluation matrix has rank {found}, expected {expected}")
            }
            Error::NonuniqueCubic { dimension } => {
                write!(f, "cubic interpolation space has dimension {dimension}, expected 1")
            }
            Error::NonuniqueQuartic { dimension } => {
                write!(f, "quartic interpolation space has dimension {dimension}, expected 1")
            }
            Error::SupportOnBigDiagonal => {
                write!(f, "support points collide; presentation requires distinct points")
            }
            Error::UnsupportedCase { detail } => write!(f, "unsupported case: {detail}"),
            Error::ZeroPoint => write!(f, "projective point has all coordinates zero"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
