//! Exact scalar arithmetic and incremental echelon machinery.
//!
//! Everything downstream (scheme validation, algebra closures, Wedderburn
//! idempotents) is computed over `Q` or a cyclotomic extension `Q(zeta_p)`.
//! There is no floating point anywhere: dimensions must come out as exact
//! integers and idempotency must hold on the nose.

mod cyclotomic;
mod matrix;
mod span;

pub use cyclotomic::Cyc;
pub use matrix::{mat_mul, Mat};
pub use span::{center_of_span, null_space, MatrixSpan, Span};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar used for all base-field computations.
pub type Rat = BigRational;

/// Shorthand for a small integer as a `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the exact fraction `n/d`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Errors from the exact linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cyclotomic field mismatch: Q(zeta_{0}) vs Q(zeta_{1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("span is not multiplicatively closed: product of basis elements {0} and {1} escapes the span")]
    NotClosed(usize, usize),
}

/// The scalar interface shared by `Rat` and `Cyc`.
///
/// Values carry their own field context (a cyclotomic scalar knows its
/// prime), so zero/one are derived from an existing witness.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero; callers test `is_zero` first.
    fn inv(&self) -> Self;
}

impl Scalar for Rat {
    fn zero_like(&self) -> Self {
        use num_traits::Zero;
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        use num_traits::One;
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Scalar::is_zero(self), "inverse of zero rational");
        self.recip()
    }
}
