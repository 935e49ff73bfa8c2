//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order: `coeffs[j]` is the
//! coefficient of `z^j`. The representation is canonical: the vector is
//! empty for the zero polynomial and otherwise ends in a nonzero entry, so
//! `degree` is `len - 1` for nonzero polynomials and `None` for zero.

use crate::rational::{format_rational, Rational};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// gcd/cofactors of the pair (0, 0) is undefined.
    BothZero,
    /// Homogenization of the zero polynomial is undefined.
    ZeroPolynomial,
    /// A requested total degree is below the polynomial's degree.
    DegreeBound { required: usize, given: usize },
    DivisionByZero,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::BothZero => write!(f, "both polynomials are zero"),
            PolyError::ZeroPolynomial => write!(f, "the zero polynomial is not allowed here"),
            PolyError::DegreeBound { required, given } => {
                write!(f, "size {given} is below the required degree {required}")
            }
            PolyError::DivisionByZero => write!(f, "polynomial division by zero"),
        }
    }
}

impl std::error::Error for PolyError {}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    /// The constant polynomial `c` (zero polynomial if `c` is zero).
    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn variable() -> Self {
        Polynomial::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * z^deg` (zero polynomial if `c` is zero).
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }
    }

    /// Ascending-order coefficients; trailing zeros are stripped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor for tests and examples.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| crate::rational_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial; there is no sentinel degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Scales a nonzero polynomial to leading coefficient one.
    pub fn monic(&self) -> Option<Polynomial> {
        let lead = self.leading_coeff()?;
        Some(self.scale(&lead.recip()))
    }

    /// Euclidean quotient and remainder, `self = q * divisor + r` with
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let d_lead = divisor.leading_coeff().unwrap();
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero();
        while let Some(r_deg) = remainder.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = remainder.leading_coeff().unwrap() / d_lead;
            let term = Polynomial::monomial(factor, r_deg - d_deg);
            remainder = &remainder - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Ok((quotient, remainder))
    }

    /// Quotient when the division is exact, `None` otherwise.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    /// `gcd(f, 0)` is the monic multiple of `f`; errors if both are zero.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero in the loop");
            a = b;
            b = r;
        }
        Ok(a.monic().expect("gcd of a nonzero pair is nonzero"))
    }

    /// Zero-pads the coefficients to a two-variable homogeneous form of
    /// total degree `n`. Requires `n >= deg` and a nonzero polynomial.
    pub fn homogenize(&self, n: usize) -> Result<HomogeneousPoly, PolyError> {
        let deg = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if n < deg {
            return Err(PolyError::DegreeBound {
                required: deg,
                given: n,
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n + 1, Rational::zero());
        Ok(HomogeneousPoly {
            coeffs,
            total_degree: n,
        })
    }

    /// Renders a canonical expression string in the variable `var`,
    /// highest power first. Parsing the result reproduces `self`.
    pub fn to_expression(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = match j {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{j}"),
            };
            if power.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&power);
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_expression('z'))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) - rhs.coeff(j)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

/// The coprime quotients of a pair by its monic gcd: `f = f_cofactor * gcd`
/// and `g = g_cofactor * gcd`, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdFactorization {
    pub gcd: Polynomial,
    pub f_cofactor: Polynomial,
    pub g_cofactor: Polynomial,
}

/// Factors a pair through its monic gcd. Errors only when both inputs are
/// zero; a single zero member yields a zero cofactor.
pub fn cofactors(f: &Polynomial, g: &Polynomial) -> Result<GcdFactorization, PolyError> {
    let gcd = f.gcd(g)?;
    let f_cofactor = f
        .divide_exact(&gcd)
        .expect("gcd divides f by construction");
    let g_cofactor = g
        .divide_exact(&gcd)
        .expect("gcd divides g by construction");
    Ok(GcdFactorization {
        gcd,
        f_cofactor,
        g_cofactor,
    })
}

/// A two-variable homogeneous polynomial of total degree `n`: entry `j`
/// holds the coefficient of `y^(n-j) z^j`, so the vector length is exactly
/// `n + 1` with explicit zero padding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    coeffs: Vec<Rational>,
    total_degree: usize,
}

impl HomogeneousPoly {
    pub fn total_degree(&self) -> usize {
        self.total_degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Multiplicity of the root `y = 0`: the padding above the degree of
    /// the dehomogenized polynomial.
    pub fn y_multiplicity(&self) -> usize {
        let top = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("homogeneous form is built from a nonzero polynomial");
        self.total_degree - top
    }

    /// Divides out `y^k`, lowering the total degree.
    pub fn divide_y_power(&self, k: usize) -> Result<HomogeneousPoly, PolyError> {
        if k > self.y_multiplicity() {
            return Err(PolyError::DegreeBound {
                required: self.y_multiplicity(),
                given: k,
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(self.total_degree - k + 1);
        Ok(HomogeneousPoly {
            coeffs,
            total_degree: self.total_degree - k,
        })
    }

    /// Sets `y = 1`, recovering a univariate polynomial.
    pub fn dehomogenize(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.clone())
    }
}
