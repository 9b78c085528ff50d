//! Arithmetic in the cyclotomic field `Q(zeta_p)` for a small prime `p`.
//!
//! An element is kept in canonical form `c_0 + c_1*z + ... + c_{p-2}*z^{p-2}`
//! where `z` is a fixed primitive p-th root of unity; the relation
//! `1 + z + ... + z^{p-1} = 0` reduces any degree-(p-1) term. For `p = 2`
//! the field degenerates to `Q` (`z = -1`) and an element is a single
//! rational coefficient, so 2-group computations never leave the rationals.

use super::{LinalgError, Rat, Scalar};
use num_traits::{One, Zero};

/// An element of `Q(zeta_p)` in canonical reduced form.
#[derive(Debug, Clone, PartialEq)]
pub struct Cyc {
    prime: u32,
    /// Exactly `prime - 1` coefficients, constant term first.
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero(prime: u32) -> Self {
        assert!(prime >= 2, "cyclotomic prime must be at least 2");
        Cyc {
            prime,
            coeffs: vec![Rat::zero(); (prime - 1) as usize],
        }
    }

    pub fn one(prime: u32) -> Self {
        Self::from_rat(prime, Rat::one())
    }

    /// Embeds a rational constant.
    pub fn from_rat(prime: u32, r: Rat) -> Self {
        let mut c = Self::zero(prime);
        c.coeffs[0] = r;
        c
    }

    /// The fixed primitive root `z` raised to the power `e`, canonically reduced.
    pub fn zeta_pow(prime: u32, e: i64) -> Self {
        let p = prime as i64;
        let e = e.rem_euclid(p) as usize;
        let mut raw = vec![Rat::zero(); prime as usize];
        raw[e] = Rat::one();
        Self::reduce(prime, raw)
    }

    /// Canonicalizes a length-`p` coefficient vector over the power basis
    /// `1, z, ..., z^{p-1}` using `z^{p-1} = -(1 + z + ... + z^{p-2})`.
    fn reduce(prime: u32, mut raw: Vec<Rat>) -> Self {
        assert_eq!(raw.len(), prime as usize);
        let top = raw.pop().unwrap();
        for c in raw.iter_mut() {
            *c = &*c - &top;
        }
        Cyc { prime, coeffs: raw }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    /// Canonical coefficients, constant term first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// True when both operands live in the same field.
    pub fn same_field(&self, other: &Cyc) -> bool {
        self.prime == other.prime
    }

    fn check(&self, other: &Cyc) -> Result<(), LinalgError> {
        if self.prime != other.prime {
            return Err(LinalgError::FieldMismatch(self.prime, other.prime));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Cyc) -> Result<Cyc, LinalgError> {
        self.check(other)?;
        Ok(Scalar::add(self, other))
    }

    pub fn checked_mul(&self, other: &Cyc) -> Result<Cyc, LinalgError> {
        self.check(other)?;
        Ok(Scalar::mul(self, other))
    }

    pub fn checked_eq(&self, other: &Cyc) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rat) -> Cyc {
        Cyc {
            prime: self.prime,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// True when the element lies in `Q`, returning the constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiplicative inverse by solving `self * x = 1` over the power basis.
    pub fn checked_inv(&self) -> Result<Cyc, LinalgError> {
        if Scalar::is_zero(self) {
            return Err(LinalgError::DivisionByZero);
        }
        let m = (self.prime - 1) as usize;
        // Column j of the system is self * z^j expressed in the canonical basis.
        let mut cols = Vec::with_capacity(m);
        for j in 0..m {
            let zj = Cyc::zeta_pow(self.prime, j as i64);
            cols.push(Scalar::mul(self, &zj).coeffs);
        }
        // Gaussian elimination on the m x m system (columns are basis images).
        let mut a = vec![vec![Rat::zero(); m + 1]; m];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..m {
                a[i][j] = col[i].clone();
            }
        }
        a[0][m] = Rat::one(); // right-hand side e_0
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..m {
            if let Some(r) = (row..m).find(|&r| !Zero::is_zero(&a[r][col])) {
                a.swap(row, r);
                let inv = a[row][col].recip();
                for v in a[row].iter_mut() {
                    *v = &*v * &inv;
                }
                for r2 in 0..m {
                    if r2 != row && !Zero::is_zero(&a[r2][col]) {
                        let f = a[r2][col].clone();
                        for c2 in 0..=m {
                            let delta = &f * &a[row][c2];
                            a[r2][c2] = &a[r2][c2] - &delta;
                        }
                    }
                }
                pivots.push(col);
                row += 1;
            }
        }
        // A field element acts invertibly, so the system is full rank.
        debug_assert_eq!(
            row, m,
            "multiplication matrix of a nonzero cyclotomic must be invertible"
        );
        let mut out = Cyc::zero(self.prime);
        for (r, &pc) in pivots.iter().enumerate() {
            out.coeffs[pc] = a[r][m].clone();
        }
        Ok(out)
    }
}

impl Scalar for Cyc {
    fn zero_like(&self) -> Self {
        Cyc::zero(self.prime)
    }
    fn one_like(&self) -> Self {
        Cyc::one(self.prime)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.prime, rhs.prime, "cyclotomic prime mismatch");
        Cyc {
            prime: self.prime,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.prime, rhs.prime, "cyclotomic prime mismatch");
        Cyc {
            prime: self.prime,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.prime, rhs.prime, "cyclotomic prime mismatch");
        let p = self.prime as usize;
        // Convolve, folding exponents mod p since z^p = 1.
        let mut raw = vec![Rat::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if Zero::is_zero(b) {
                    continue;
                }
                let e = (i + j) % p;
                raw[e] = &raw[e] + &(a * b);
            }
        }
        Cyc::reduce(self.prime, raw)
    }
    fn neg(&self) -> Self {
        Cyc {
            prime: self.prime,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero cyclotomic")
    }
}

impl std::fmt::Display for Cyc {
    /// Prints coefficient tuples as `c0 + c1*z + ...` with `z` the fixed
    /// primitive p-th root of unity.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
