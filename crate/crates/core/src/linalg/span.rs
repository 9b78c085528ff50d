//! Incremental reduced row echelon spans and null spaces.
//!
//! A `Span` keeps a basis in reduced echelon form with leading-1 pivots and
//! pivot columns sorted ascending, so two spans are equal as subspaces
//! exactly when they are equal as values. That makes algebra and scheme
//! comparisons plain `==` checks.

use super::{mat_mul, LinalgError, Mat, Rat, Scalar};

/// An echelonized basis of vectors of a fixed width.
#[derive(Debug, Clone, PartialEq)]
pub struct Span<S: Scalar> {
    width: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Span<S> {
    pub fn new(width: usize) -> Self {
        Span {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminates all pivot columns from `v`, leaving the canonical
    /// remainder of `v` modulo the span.
    pub fn reduce(&self, v: &mut [S]) {
        assert_eq!(v.len(), self.width);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&f.mul(r));
                }
            }
        }
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Inserts `v`, returning `true` when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        assert_eq!(v.len(), self.width, "span width mismatch");
        self.reduce(&mut v);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[pivot].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        // Clear the new pivot column from the existing rows, then keep the
        // rows sorted by pivot column so the representation is canonical.
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let f = row[pivot].clone();
            for (x, n) in row.iter_mut().zip(&v) {
                if !n.is_zero() {
                    *x = x.sub(&f.mul(n));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    /// A basis of the solution space of `rows * x = 0`, where each element
    /// of `rows` is one linear constraint of width `self.width`.
    pub fn from_constraints(width: usize, constraints: impl IntoIterator<Item = Vec<S>>) -> Self {
        let mut span = Span::new(width);
        for c in constraints {
            span.insert(c);
        }
        span
    }
}

/// Basis of the null space of the constraint span (free-column completion).
pub fn null_space<S: Scalar>(constraints: &Span<S>, witness: &S) -> Vec<Vec<S>> {
    let width = constraints.width();
    let one = witness.one_like();
    let zero = witness.zero_like();
    let mut out = Vec::new();
    for col in 0..width {
        if constraints.pivots().contains(&col) {
            continue;
        }
        // Free column: back-substitute pivot coordinates.
        let mut v = vec![zero.clone(); width];
        v[col] = one.clone();
        for (row, &pc) in constraints.rows().iter().zip(constraints.pivots()) {
            v[pc] = row[col].neg();
        }
        out.push(v);
    }
    out
}

/// An echelonized span of flattened `n x n` matrices over a scalar field.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSpan<S: Scalar> {
    ambient: usize,
    span: Span<S>,
}

impl<S: Scalar> MatrixSpan<S> {
    pub fn new(ambient: usize) -> Self {
        MatrixSpan {
            ambient,
            span: Span::new(ambient * ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn span(&self) -> &Span<S> {
        &self.span
    }

    /// Inserts a matrix; the flag is `true` iff it was independent of the span.
    pub fn insert(&mut self, m: &Mat<S>) -> Result<bool, LinalgError> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "inserting {}x{} into span of {n}x{n} matrices",
                m.rows(),
                m.cols(),
                n = self.ambient,
            )));
        }
        Ok(self.span.insert(m.flatten()))
    }

    pub fn contains(&self, m: &Mat<S>) -> Result<bool, LinalgError> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return Err(LinalgError::DimensionMismatch(
                "membership test with wrong shape".into(),
            ));
        }
        Ok(self.span.contains(&m.flatten()))
    }

    /// The r-th basis element reshaped back into a matrix.
    pub fn basis_matrix(&self, r: usize) -> Mat<S> {
        Mat::from_flat(self.ambient, self.ambient, self.span.rows()[r].clone())
    }

    pub fn basis_matrices(&self) -> Vec<Mat<S>> {
        (0..self.rank()).map(|r| self.basis_matrix(r)).collect()
    }
}

/// The center of a matrix algebra: all `z` in the span with `z*t = t*z`
/// for every generator `t`.
///
/// `basis` must span the algebra multiplicatively; when `check_closed` is
/// set this is verified first. The center is computed as the null space of
/// the stacked commutator system, expressed in the coordinates of
/// `algebra`'s echelon basis, then mapped back to matrices.
pub fn center_of_span(
    basis: &[Mat<Rat>],
    algebra: &MatrixSpan<Rat>,
    check_closed: bool,
) -> Result<MatrixSpan<Rat>, LinalgError> {
    let n = algebra.ambient();
    if check_closed {
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                if !algebra.contains(&mat_mul(a, b)?)? {
                    return Err(LinalgError::NotClosed(i, j));
                }
            }
        }
    }
    let dim = algebra.rank();
    let alg_basis = algebra.basis_matrices();
    // Unknowns: coefficients c_r of z = sum c_r * B_r. One scalar equation
    // per entry of each commutator [z, t].
    let mut constraints = Span::new(dim);
    for t in basis {
        let comms: Vec<Mat<Rat>> = alg_basis.iter().map(|b| b.mul(t).sub(&t.mul(b))).collect();
        for entry in 0..n * n {
            let row: Vec<Rat> = comms.iter().map(|c| c.flatten()[entry].clone()).collect();
            if row.iter().all(Scalar::is_zero) {
                continue;
            }
            constraints.insert(row);
        }
    }
    let zero = crate::linalg::rat(0);
    let mut center = MatrixSpan::new(n);
    for coeffs in null_space(&constraints, &zero) {
        let mut z = Mat::zero_like(n, n, &zero);
        for (c, b) in coeffs.iter().zip(&alg_basis) {
            if !Scalar::is_zero(c) {
                z = z.add(&b.scale(c));
            }
        }
        center.insert(&z)?;
    }
    Ok(center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn m2(entries: [[i64; 2]; 2]) -> Mat<Rat> {
        Mat::from_fn(2, 2, |r, c| rat(entries[r][c]))
    }

    #[test]
    fn single_vector_then_scalar_multiple() {
        let mut span = MatrixSpan::new(2);
        assert!(span.insert(&m2([[1, 0], [0, 0]])).unwrap());
        assert_eq!(span.rank(), 1);
        assert!(!span.insert(&m2([[2, 0], [0, 0]])).unwrap());
        assert_eq!(span.rank(), 1);
    }

    #[test]
    fn three_independent_matrices() {
        // I, J and one unipotent: reduced by hand these flatten to rank 3.
        let mut span = MatrixSpan::new(2);
        span.insert(&m2([[1, 0], [0, 1]])).unwrap();
        span.insert(&m2([[1, 1], [1, 1]])).unwrap();
        span.insert(&m2([[1, 1], [0, 1]])).unwrap();
        assert_eq!(span.rank(), 3);
    }

    #[test]
    fn insert_is_idempotent() {
        let mut span = MatrixSpan::new(2);
        let m = m2([[3, 1], [0, 2]]);
        span.insert(&m).unwrap();
        let rank = span.rank();
        assert!(!span.insert(&m).unwrap());
        assert_eq!(span.rank(), rank);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let mut span = MatrixSpan::new(3);
        let m = m2([[1, 0], [0, 1]]);
        assert!(span.insert(&m).is_err());
    }

    #[test]
    fn center_of_full_matrix_algebra_is_scalars() {
        let units: Vec<Mat<Rat>> = (0..4)
            .map(|k| Mat::from_fn(2, 2, |r, c| if 2 * r + c == k { rat(1) } else { rat(0) }))
            .collect();
        let mut alg = MatrixSpan::new(2);
        for u in &units {
            alg.insert(u).unwrap();
        }
        let center = center_of_span(&units, &alg, true).unwrap();
        assert_eq!(center.rank(), 1);
    }

    #[test]
    fn center_of_commutative_algebra_is_everything() {
        let i = m2([[1, 0], [0, 1]]);
        let p = m2([[0, 1], [1, 0]]);
        let mut alg = MatrixSpan::new(2);
        alg.insert(&i).unwrap();
        alg.insert(&p).unwrap();
        let center = center_of_span(&[i, p], &alg, true).unwrap();
        assert_eq!(center.rank(), 2);
    }

    #[test]
    fn closure_check_catches_open_spans() {
        // {I, N} with N nilpotent of index 2 is closed; {I, E12+E21?} no:
        // use a generator whose square escapes the span.
        let i = m2([[1, 0], [0, 1]]);
        let a = m2([[0, 1], [2, 0]]); // a^2 = 2I is fine; use b with b^2 outside
        let b = m2([[1, 1], [0, 0]]);
        let mut alg = MatrixSpan::new(2);
        alg.insert(&i).unwrap();
        alg.insert(&a).unwrap();
        alg.insert(&b).unwrap();
        let res = center_of_span(&[i, a, b], &alg, true);
        assert!(matches!(res, Err(LinalgError::NotClosed(_, _))));
    }
}
