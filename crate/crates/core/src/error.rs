use thiserror::Error;

/// Errors produced by complex construction, linear algebra, and the checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("face {{{0}}} is not a face of the complex")]
    FaceNotInComplex(String),
    #[error("skeleton index {m} out of range for a complex of dimension {dim}")]
    SkeletonOutOfRange { m: i64, dim: i64 },
    #[error("operation requires a non-void complex")]
    VoidComplex,
    #[error("operation requires a complex of dimension >= 0")]
    EmptyComplex,
    #[error("boundary degree {i} out of range for a complex of dimension {dim}")]
    BoundaryDegreeOutOfRange { i: i64, dim: i64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field '{0}': expected 'q' or a prime number")]
    InvalidFieldSpec(String),
    #[error("Serre parameter r must be at least 2, got {0}")]
    SerreRTooSmall(i64),
    #[error("r = {r} outside the valid range [2, {d}]")]
    ROutOfRange { r: i64, d: i64 },
    #[error("the empty face has no interior point")]
    EmptyFaceLocalHomology,
    #[error("matrix entry ({row}, {col}) out of bounds for a {n_rows}x{n_cols} matrix")]
    EntryOutOfBounds {
        row: usize,
        col: usize,
        n_rows: usize,
        n_cols: usize,
    },
    #[error("duplicate matrix entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("explicit zero scalar at ({row}, {col})")]
    ZeroEntry { row: usize, col: usize },
    #[error("the empty complex {{∅}} has no facet-file representation")]
    UnrepresentableComplex,
}

pub type Result<T> = std::result::Result<T, Error>;
