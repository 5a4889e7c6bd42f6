//! Dense matrices over an exact coefficient ring.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, LaurentPoly};

/// A dense row-major matrix over a [`CoeffRing`].
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: CoeffRing> RingMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Dimension("ragged rows in matrix literal".into()));
            }
            entries.extend(row);
        }
        Ok(RingMatrix { rows: nrows, cols: ncols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, entries }
    }

    /// Identity matrix whose entries share the ring context of `like`.
    pub fn identity_like(n: usize, like: &R) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { like.one_like() } else { like.zero_like() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = self.entries[0].zero_like();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(rhs.at(k, j)));
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum dimension mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(rhs.at(i, j)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix sum dimension mismatch");
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(rhs.at(i, j)))
    }

    /// Copy with row `del_r` and column `del_c` removed.
    pub fn minor(&self, del_r: usize, del_c: usize) -> Self {
        Self::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < del_r { i } else { i + 1 };
            let sj = if j < del_c { j } else { j + 1 };
            self.at(si, sj).clone()
        })
    }

    /// Top-left `k x k` submatrix.
    pub fn leading_block(&self, k: usize) -> Self {
        Self::from_fn(k, k, |i, j| self.at(i, j).clone())
    }

    pub fn map<S: CoeffRing>(&self, mut f: impl FnMut(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| f(e)).collect(),
        }
    }

    /// Determinant by cofactor expansion along the first row. Exponential in
    /// the dimension, but exact over any coefficient ring and fine at the
    /// sizes used here; it also serves as an independent cross-check for the
    /// fraction-free route.
    pub fn det_laplace(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        assert!(self.rows > 0, "det_laplace needs a ring context; use laurent_det for 0x0");
        Ok(self.det_laplace_inner())
    }

    fn det_laplace_inner(&self) -> R {
        let n = self.rows;
        if n == 1 {
            return self.entries[0].clone();
        }
        let mut acc = self.entries[0].zero_like();
        for j in 0..n {
            if self.at(0, j).is_zero() {
                continue;
            }
            let term = self.at(0, j).mul(&self.minor(0, j).det_laplace_inner());
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
}

impl RingMatrix<LaurentPoly> {
    /// Exact determinant over the Laurent ring.
    ///
    /// Strategy: factor the smallest `t`-power out of every row so that the
    /// entries become ordinary polynomials, run fraction-free (Bareiss)
    /// elimination there, then restore the extracted monomial. The interior
    /// divisions of the Bareiss recurrence are exact over an integral domain,
    /// so no fraction field is needed and coefficient growth stays tame.
    pub fn laurent_det(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one()); // empty product
        }
        let mut shift_total = 0i64;
        let mut work: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let row_min = (0..n).filter_map(|j| self.at(i, j).min_exp()).min();
            let Some(e) = row_min else {
                return Ok(LaurentPoly::zero()); // all-zero row
            };
            shift_total += e;
            work.push((0..n).map(|j| self.at(i, j).shift(-e)).collect());
        }

        let mut sign_flip = false;
        let mut prev_pivot = LaurentPoly::one();
        for k in 0..n.saturating_sub(1) {
            if work[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !work[r][k].is_zero()) else {
                    return Ok(LaurentPoly::zero());
                };
                work.swap(k, r);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&work[i][j] * &work[k][k]) - &(&work[i][k] * &work[k][j]);
                    work[i][j] = num.exact_div(&prev_pivot).map_err(|_| {
                        Error::InternalConsistency(
                            "inexact interior division in fraction-free elimination".into(),
                        )
                    })?;
                }
            }
            prev_pivot = work[k][k].clone();
        }
        let mut det = work[n - 1][n - 1].clone();
        if sign_flip {
            det = -&det;
        }
        Ok(det.shift(shift_total))
    }

    /// Exact adjugate: `m * adjugate(m) = det(m) * I`.
    pub fn laurent_adjugate(&self) -> Result<RingMatrix<LaurentPoly>> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        if n == 1 {
            return Ok(RingMatrix::from_fn(1, 1, |_, _| LaurentPoly::one()));
        }
        let mut out = RingMatrix::from_fn(n, n, |_, _| LaurentPoly::zero());
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).laurent_det()?;
                let signed = if (i + j) % 2 == 0 { cof } else { -&cof };
                out.set(j, i, signed); // transposed cofactor
            }
        }
        Ok(out)
    }

    /// JSON array of rows, each an array of Laurent objects.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                serde_json::Value::Array(
                    (0..self.cols).map(|j| self.at(i, j).to_json()).collect(),
                )
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

impl<R: CoeffRing> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RingMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}  ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
