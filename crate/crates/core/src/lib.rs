//! Exact generalized-inverse toolkit for complex matrices over the Gaussian
//! rationals.
//!
//! Everything here is computed in exact arithmetic: scalars are complex
//! numbers with arbitrary-precision rational parts, and every predicate is a
//! zero-tolerance structural equality. The crate provides
//!
//! * [`scalar`]: the exact scalar field,
//! * [`matrix`]: dense square matrices, elimination, full-rank factorization,
//!   and subspace comparisons,
//! * [`ginv`]: Moore-Penrose, Drazin, and group inverses plus EP detection,
//! * [`weighted`]: weighted group/Drazin inverses and the weighted EP-style
//!   classes for a pair `(a, w)`, with decomposition and projection
//!   certificates,
//! * [`theorems`]: executable consistency checkers that certify the
//!   equivalences relating those classes, instance by instance,
//! * [`gen`]: deterministic seeded generators for test corpora, including
//!   exact rational unitaries.
//!
//! Dimensions are expected to stay small (up to eight or so); the algorithms
//! are polynomial but rational entries grow quickly under elimination.

pub mod error;
pub mod gen;
pub mod ginv;
pub mod matrix;
pub mod scalar;
pub mod theorems;
pub mod weighted;

pub use error::Error;
pub use matrix::{Frf, GMat, RectMat};
pub use scalar::{GScalar, Rational};
pub use weighted::WPair;
