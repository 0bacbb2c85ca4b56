use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^32 - 1")]
    PrimeTooLarge(u64),
    #[error("bad field spec {0:?}: expected `q` or `f:<prime>`")]
    BadFieldSpec(String),
    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("fields differ: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("expected a vector of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Failures while validating a Cayley table as a gyrogroup.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GyroError {
    #[error("empty table")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({row},{col}) = {value} is outside [0,{order})")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("row {0} is not a permutation (left translation not bijective)")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation (right translation not bijective)")]
    ColumnNotPermutation(usize),
    #[error("no left identity")]
    NoLeftIdentity,
    #[error("element {0} has no left inverse")]
    MissingInverse(usize),
    #[error("gyr[{0},{1}] is not an automorphism")]
    GyrNotAutomorphism(usize, usize),
    #[error("left gyroassociative law fails at ({0},{1},{2})")]
    LeftGyroassociativityFails(usize, usize, usize),
    #[error("left loop property fails at ({0},{1})")]
    LeftLoopFails(usize, usize),
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown builtin {0:?}; expected g8, cyclic:<n>, klein or trivial:1")]
    UnknownBuiltin(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MobiusError {
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("sample count must be at least 1")]
    InvalidSampleCount,
    #[error("point ({re}, {im}) is not inside the open unit disk")]
    PointOutsideDisk { re: f64, im: f64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("expected {expected} matrices (one per element), found {found}")]
    WrongMatrixCount { expected: usize, found: usize },
    #[error("matrix for element {element} is {rows}x{cols}, expected {degree}x{degree}")]
    WrongMatrixShape { element: usize, rows: usize, cols: usize, degree: usize },
    #[error("subspace has ambient dimension {found}, representation has degree {degree}")]
    DegreeMismatch { degree: usize, found: usize },
    #[error("characteristic {characteristic} divides the order {order}")]
    CharacteristicDividesOrder { characteristic: u64, order: usize },
    #[error("subspace is not invariant (element {element} moves it)")]
    NotInvariant { element: usize },
    #[error("search space of {points} points exceeds the bound {bound}")]
    SearchSpaceTooLarge { points: u128, bound: u128 },
    #[error("representations are over different gyrogroups")]
    GyrogroupMismatch,
    #[error("representation is invalid: {0}")]
    Invalid(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegularError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("prime {prime} does not divide the order {order}")]
    PrimeDoesNotDivideOrder { prime: u64, order: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A text input error, tagged with the 1-based line it occurred on.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    UnexpectedEof(String),
    #[error(transparent)]
    Gyro(#[from] GyroError),
}
