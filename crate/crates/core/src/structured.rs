//! Builders for the structured matrices attached to a polynomial.
//!
//! For `f = f_0 + f_1 z + ... + f_n z^n` (coefficients beyond the degree
//! read as zero) the builders produce, at an explicit size `n`:
//!
//! * the Hankel matrix with entry `(j, k) = f_{j+k+1}`,
//! * the upper-triangular Toeplitz matrix with entry `(j, k) = f_{k-j}`,
//! * the reverse identity (ones on the antidiagonal),
//! * the nilpotent Jordan block (ones on the first superdiagonal),
//! * the power column `(1, z, ..., z^{n-1})^T`.
//!
//! The size is an explicit argument rather than being inferred from the
//! degree because the oversized case `n > deg f` is meaningful throughout.

use crate::matrix::ExactMatrix;
use crate::poly::Polynomial;
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    /// Structured matrices here are at least 1x1.
    ZeroSize,
    /// The polynomial does not fit: its degree exceeds the requested size.
    SizeBelowDegree { size: usize, degree: usize },
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::ZeroSize => write!(f, "matrix size must be positive"),
            BuildError::SizeBelowDegree { size, degree } => {
                write!(f, "size {size} is below the polynomial degree {degree}")
            }
        }
    }
}

impl std::error::Error for BuildError {}

fn check_size(f: &Polynomial, n: usize) -> Result<(), BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    match f.degree() {
        Some(degree) if degree > n => Err(BuildError::SizeBelowDegree { size: n, degree }),
        _ => Ok(()),
    }
}

/// `n x n` Hankel matrix of `f`: entry `(j, k) = f_{j+k+1}`.
pub fn hankel(f: &Polynomial, n: usize) -> Result<ExactMatrix, BuildError> {
    check_size(f, n)?;
    Ok(ExactMatrix::from_fn(n, n, |j, k| f.coeff(j + k + 1)))
}

/// `n x n` upper-triangular Toeplitz matrix of `f`: entry `(j, k) = f_{k-j}`
/// for `k >= j`, zero below the diagonal.
pub fn toeplitz(f: &Polynomial, n: usize) -> Result<ExactMatrix, BuildError> {
    check_size(f, n)?;
    Ok(ExactMatrix::from_fn(n, n, |j, k| {
        if k >= j {
            f.coeff(k - j)
        } else {
            Rational::zero()
        }
    }))
}

/// Reverse identity: ones on the antidiagonal. An involution whose left
/// action reverses rows, turning Hankel into Toeplitz form and back.
pub fn reverse_identity(n: usize) -> Result<ExactMatrix, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    Ok(ExactMatrix::from_fn(n, n, |j, k| {
        if j + k == n - 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// Nilpotent Jordan block: ones on the first superdiagonal.
pub fn nilpotent_block(n: usize) -> Result<ExactMatrix, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    Ok(ExactMatrix::from_fn(n, n, |j, k| {
        if k == j + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// `n x 1` column of powers of `z`: entry `j` is `z^j`.
pub fn vandermonde_column(n: usize, z: &Rational) -> Result<ExactMatrix, BuildError> {
    if n == 0 {
        return Err(BuildError::ZeroSize);
    }
    let mut power = Rational::one();
    Ok(ExactMatrix::from_fn(n, 1, |_, _| {
        let current = power.clone();
        power *= z;
        current
    }))
}
