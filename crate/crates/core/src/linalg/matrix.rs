//! Dense matrices over an exact scalar field.

use super::{Cyc, LinalgError, Rat, Scalar};

/// A dense row-major matrix over an exact scalar type.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(rows > 0 && cols > 0, "matrices must be nonempty");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        assert!(r > 0);
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity_like(n: usize, witness: &S) -> Self {
        Mat::from_fn(n, n, |r, c| {
            if r == c {
                witness.one_like()
            } else {
                witness.zero_like()
            }
        })
    }

    pub fn zero_like(rows: usize, cols: usize, witness: &S) -> Self {
        let z = witness.zero_like();
        Mat::from_fn(rows, cols, |_, _| z.clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Row-major flattening, used as the coordinate vector of a matrix span.
    pub fn flatten(&self) -> Vec<S> {
        self.data.clone()
    }

    pub fn into_flat(self) -> Vec<S> {
        self.data
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    /// Exact matrix product; panics on non-conformable shapes.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product shapes {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let zero = self.data[0].zero_like();
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(rhs.get(k, c)));
                }
                out.push(acc);
            }
        }
        Mat {
            rows: self.rows,
            cols: rhs.cols,
            data: out,
        }
    }

    /// Kronecker product with the usual block layout: the `(i,j)` block of
    /// the result is `self[i][j] * rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Mat::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let a = self.get(r / rhs.rows, c / rhs.cols);
            a.mul(rhs.get(r % rhs.rows, c % rhs.cols))
        })
    }
}

/// Checked exact product, reporting shape mismatches as errors.
pub fn mat_mul<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Result<Mat<S>, LinalgError> {
    if a.cols() != b.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{}x{} * {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(a.mul(b))
}

impl Mat<Rat> {
    /// Promotes a rational matrix into `Q(zeta_p)`.
    pub fn promote(&self, prime: u32) -> Mat<Cyc> {
        Mat::from_fn(self.rows, self.cols, |r, c| {
            Cyc::from_rat(prime, self.get(r, c).clone())
        })
    }
}
