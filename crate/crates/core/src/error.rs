//! Error type shared by parsing, construction, and the theorem registry.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational literal was not of the form `p` or `p/q` with decimal
    /// digits and an optional leading minus.
    BadRational(String),
    /// A rational literal had denominator zero.
    ZeroDenominator(String),
    /// Matrices must have dimension at least one.
    ZeroDimension,
    /// The `entries` field did not have exactly `n` rows.
    RowCount { n: usize, rows: usize },
    /// A row did not have exactly `n` entries.
    RowLength { n: usize, row: usize, len: usize },
    /// The two matrices of a pair differ in dimension.
    PairDimension { a: usize, w: usize },
    /// The theorem id is not registered.
    UnknownTheorem(String),
    /// The generator cannot produce an instance of the requested dimension.
    UnsupportedDimension { family: &'static str, n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadRational(s) => write!(f, "malformed rational literal {s:?}"),
            Error::ZeroDenominator(s) => write!(f, "zero denominator in rational literal {s:?}"),
            Error::ZeroDimension => write!(f, "matrix dimension must be at least 1"),
            Error::RowCount { n, rows } => {
                write!(f, "expected {n} rows, found {rows}")
            }
            Error::RowLength { n, row, len } => {
                write!(f, "row {row} has {len} entries, expected {n}")
            }
            Error::PairDimension { a, w } => {
                write!(f, "matrix dimensions differ: a is {a}x{a}, w is {w}x{w}")
            }
            Error::UnknownTheorem(id) => write!(f, "unknown theorem id {id:?}"),
            Error::UnsupportedDimension { family, n } => {
                write!(f, "family {family} cannot generate {n}x{n} instances")
            }
        }
    }
}

impl std::error::Error for Error {}
