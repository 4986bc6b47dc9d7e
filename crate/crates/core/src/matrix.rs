//! Dense matrices over the exact complex rationals.
//!
//! [`GMat`] is the public square type used throughout the crate; it forbids
//! dimension zero. [`RectMat`] is the rectangular workhorse behind
//! elimination and full-rank factorization: factors of an `n x n` matrix of
//! rank `r` are `n x r` and `r x n`, and both may be empty when `r = 0`.
//!
//! Elimination uses exact division-based Gauss-Jordan with deterministic
//! pivoting: scanning columns left to right, the pivot is the first row with
//! a nonzero entry. No tolerances exist anywhere; a pivot is nonzero exactly
//! or it is zero.

use crate::error::Error;
use crate::scalar::GScalar;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Rectangular matrix, row-major. Rows or columns may be zero (empty factor).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectMat {
    rows: usize,
    cols: usize,
    entries: Vec<GScalar>,
}

impl RectMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RectMat {
            rows,
            cols,
            entries: vec![GScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RectMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, GScalar::one());
        }
        m
    }

    /// Build from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<GScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows: expected uniform length {c}"
        );
        RectMat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GScalar {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: GScalar) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GScalar::is_zero)
    }

    pub fn mul(&self, rhs: &RectMat) -> RectMat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = RectMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lik = self.get(i, k);
                if lik.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + &(lik * rhs.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &RectMat) -> RectMat {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shapes must agree"
        );
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a + b;
        }
        out
    }

    pub fn sub(&self, rhs: &RectMat) -> RectMat {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shapes must agree"
        );
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a - b;
        }
        out
    }

    pub fn scale(&self, c: &GScalar) -> RectMat {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> RectMat {
        let mut out = RectMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> RectMat {
        let mut out = RectMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &RectMat) -> RectMat {
        assert_eq!(self.rows, rhs.rows, "row counts must agree");
        let mut out = RectMat::zero(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &RectMat) -> RectMat {
        assert_eq!(self.cols, rhs.cols, "column counts must agree");
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        RectMat {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Copy of the listed columns, in the given order.
    pub fn columns(&self, idx: &[usize]) -> RectMat {
        let mut out = RectMat::zero(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form with the pivot column list.
    pub(crate) fn rref(&self) -> (RectMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for j in col..m.cols {
                        let v = m.get(r, j) - &(&f * m.get(row, j));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<RectMat> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let n = self.rows;
        let (red, pivots) = self.hstack(&RectMat::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(red.columns(&(n..2 * n).collect::<Vec<_>>()))
    }

    /// Basis of the right null space, returned as the columns of a matrix
    /// (`cols x nullity`). The basis is the standard free-variable one from
    /// the reduced echelon form.
    pub fn null_space(&self) -> RectMat {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut basis = RectMat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, GScalar::one());
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -red.get(i, fc));
            }
        }
        basis
    }
}

/// Square matrix over the exact complex rationals, dimension at least one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMat", into = "RawMat")]
pub struct GMat(RectMat);

#[derive(Serialize, Deserialize)]
struct RawMat {
    n: usize,
    entries: Vec<Vec<GScalar>>,
}

impl TryFrom<RawMat> for GMat {
    type Error = Error;
    fn try_from(raw: RawMat) -> Result<Self, Error> {
        if raw.n == 0 {
            return Err(Error::ZeroDimension);
        }
        if raw.entries.len() != raw.n {
            return Err(Error::RowCount {
                n: raw.n,
                rows: raw.entries.len(),
            });
        }
        for (i, row) in raw.entries.iter().enumerate() {
            if row.len() != raw.n {
                return Err(Error::RowLength {
                    n: raw.n,
                    row: i,
                    len: row.len(),
                });
            }
        }
        Ok(GMat(RectMat::from_rows(raw.entries)))
    }
}

impl From<GMat> for RawMat {
    fn from(m: GMat) -> RawMat {
        let n = m.n();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
            .collect();
        RawMat { n, entries }
    }
}

/// Full-rank factorization `M = F G` with `F` of full column rank and `G` of
/// full row rank. The zero matrix factors through rank 0 with empty factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frf {
    pub f: RectMat,
    pub g: RectMat,
    pub rank: usize,
}

impl GMat {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        GMat(RectMat::identity(n))
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        GMat(RectMat::zero(n, n))
    }

    /// Build from square rows. Panics on empty or ragged input.
    pub fn from_rows(rows: Vec<Vec<GScalar>>) -> Self {
        let n = rows.len();
        assert!(n >= 1, "dimension must be at least 1");
        assert!(
            rows.iter().all(|r| r.len() == n),
            "rows must all have length {n}"
        );
        GMat(RectMat::from_rows(rows))
    }

    /// Integer matrix helper, mostly for tests and examples.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        GMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| GScalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn diag(d: &[GScalar]) -> Self {
        let n = d.len();
        assert!(n >= 1, "dimension must be at least 1");
        let mut m = RectMat::zero(n, n);
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        GMat(m)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> GScalar) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        let mut m = RectMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        GMat(m)
    }

    /// Wrap a square rectangular matrix. Panics unless `rows == cols >= 1`.
    pub fn from_rect(m: RectMat) -> Self {
        assert!(
            m.rows() == m.cols() && m.rows() >= 1,
            "expected a nonempty square matrix, got {}x{}",
            m.rows(),
            m.cols()
        );
        GMat(m)
    }

    pub fn as_rect(&self) -> &RectMat {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &GScalar {
        self.0.get(i, j)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        *self == GMat::identity(self.n())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> GMat {
        GMat(self.0.adjoint())
    }

    pub fn transpose(&self) -> GMat {
        GMat(self.0.transpose())
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    pub fn scale(&self, c: &GScalar) -> GMat {
        GMat(self.0.scale(c))
    }

    /// `self^k` with `self^0 = I`.
    pub fn pow(&self, k: usize) -> GMat {
        let mut out = GMat::identity(self.n());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<GMat> {
        self.0.inverse().map(GMat)
    }

    /// Full-rank factorization via the reduced echelon form: `F` collects the
    /// pivot columns of `self`, `G` the nonzero rows of the echelon form.
    pub fn full_rank_factorization(&self) -> Frf {
        let (red, pivots) = self.0.rref();
        let rank = pivots.len();
        let f = self.0.columns(&pivots);
        let g = RectMat {
            rows: rank,
            cols: self.n(),
            entries: red.entries[..rank * self.n()].to_vec(),
        };
        Frf { f, g, rank }
    }

    /// Least `k >= 1` with `self^k = 0`, or `None` if not nilpotent. A
    /// nilpotent `n x n` matrix always has degree at most `n`, so the search
    /// is bounded.
    pub fn nilpotency_degree(&self) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=self.n() {
            if p.is_zero() {
                return Some(k);
            }
            if k < self.n() {
                p = &p * self;
            }
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_degree().is_some()
    }

    /// Column spaces coincide. Decided by ranks: `col(M) = col(N)` iff
    /// `rank([M|N]) = rank(M) = rank(N)`.
    pub fn col_space_equal(&self, other: &GMat) -> bool {
        assert_eq!(self.n(), other.n(), "dimensions must agree");
        let r1 = self.rank();
        let r2 = other.rank();
        r1 == r2 && self.0.hstack(&other.0).rank() == r1
    }

    /// Row spaces coincide, via the stacked-rank criterion.
    pub fn row_space_equal(&self, other: &GMat) -> bool {
        assert_eq!(self.n(), other.n(), "dimensions must agree");
        let r1 = self.rank();
        let r2 = other.rank();
        r1 == r2 && self.0.vstack(&other.0).rank() == r1
    }

    /// Right null spaces coincide. Null spaces are the bilinear annihilators
    /// of the row spaces, so this is row-space equality.
    pub fn null_space_equal(&self, other: &GMat) -> bool {
        self.row_space_equal(other)
    }
}

impl Add for &GMat {
    type Output = GMat;
    fn add(self, rhs: &GMat) -> GMat {
        GMat(self.0.add(&rhs.0))
    }
}

impl Sub for &GMat {
    type Output = GMat;
    fn sub(self, rhs: &GMat) -> GMat {
        GMat(self.0.sub(&rhs.0))
    }
}

impl Mul for &GMat {
    type Output = GMat;
    fn mul(self, rhs: &GMat) -> GMat {
        assert_eq!(self.n(), rhs.n(), "dimensions must agree");
        GMat(self.0.mul(&rhs.0))
    }
}

impl Neg for &GMat {
    type Output = GMat;
    fn neg(self) -> GMat {
        GMat(self.0.scale(&GScalar::from_int(-1)))
    }
}

macro_rules! forward_mat_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GMat {
            type Output = GMat;
            fn $method(self, rhs: GMat) -> GMat {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GMat> for GMat {
            type Output = GMat;
            fn $method(self, rhs: &GMat) -> GMat {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<GMat> for &GMat {
            type Output = GMat;
            fn $method(self, rhs: GMat) -> GMat {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}
forward_mat_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for GMat {
    type Output = GMat;
    fn neg(self) -> GMat {
        -&self
    }
}

impl fmt::Display for GMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            write!(f, "[")?;
            for j in 0..self.n() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
