//! Bezoutian and resultant matrices of a polynomial pair, the identity
//! chain connecting them, and the nullity / gcd-degree bookkeeping.
//!
//! For a pair `(f, g)` at working size `n >= max(deg f, deg g)`:
//!
//! * the Bezoutian `B` is the `n x n` coefficient matrix of the divided
//!   difference `b(z, w) = (f(z)g(w) - f(w)g(z)) / (z - w)`, equal to
//!   `H_f T_g - H_g T_f`;
//! * the resultant `R` is the `2n x 2n` block matrix
//!   `[[T_f, Z H_f], [T_g, Z H_g]]`, whose transpose represents the
//!   multiplication map `(u, v) -> f u + g v` in standard bases.
//!
//! Both nullities equal `(n - m) + deg gcd(f, g)` where `m` is the true
//! maximal degree; the surplus `n - m` counts the common zero at infinity
//! of the homogenized pair. Every link of that chain is exposed here as a
//! checkable operation, and [`gcd_report`] recomputes all three quantities
//! independently and cross-checks them rather than short-circuiting.

use crate::linalg::{self, KernelBasis};
use crate::matrix::ExactMatrix;
use crate::poly::{cofactors, Polynomial};
use crate::rational::Rational;
use crate::structured::{hankel, reverse_identity, toeplitz, vandermonde_column};
use num_traits::Zero;
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BezoutError {
    /// Neither matrix is defined for the pair (0, 0).
    BothZero,
    /// Working sizes are at least 1.
    ZeroSize,
    /// The working size must dominate both degrees.
    SizeBelowDegree { size: usize, required: usize },
    /// The block factorization needs `deg f = n` so that `H_f` is invertible.
    FullDegreeRequired { size: usize, degree: Option<usize> },
    /// The kernel parametrization needs both members nonzero.
    ZeroOperand,
    /// Padding comparison called with the sizes out of order.
    SizeOrder { small: usize, big: usize },
    /// An identity the theory guarantees failed to hold; this signals an
    /// implementation bug, never bad input.
    TheoremViolation(String),
}

impl fmt::Display for BezoutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BezoutError::BothZero => write!(f, "both polynomials are zero"),
            BezoutError::ZeroSize => write!(f, "working size must be positive"),
            BezoutError::SizeBelowDegree { size, required } => {
                write!(f, "working size {size} is below the maximal degree {required}")
            }
            BezoutError::FullDegreeRequired { size, degree } => match degree {
                Some(d) => write!(f, "block factorization needs deg f = {size}, got {d}"),
                None => write!(f, "block factorization needs deg f = {size}, got the zero polynomial"),
            },
            BezoutError::ZeroOperand => {
                write!(f, "kernel parametrization needs both polynomials nonzero")
            }
            BezoutError::SizeOrder { small, big } => {
                write!(f, "padding sizes out of order: {small} > {big}")
            }
            BezoutError::TheoremViolation(msg) => write!(f, "theorem violation: {msg}"),
        }
    }
}

impl std::error::Error for BezoutError {}

/// A validated pair `(f, g)` with its working size `n`.
///
/// Invariants: not both members zero, `n >= 1`, and `n >= max` of the
/// member degrees (a zero member contributes degree 0 to the bound).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutPair {
    f: Polynomial,
    g: Polynomial,
    size: usize,
}

impl BezoutPair {
    pub fn new(f: Polynomial, g: Polynomial, size: usize) -> Result<Self, BezoutError> {
        if f.is_zero() && g.is_zero() {
            return Err(BezoutError::BothZero);
        }
        if size == 0 {
            return Err(BezoutError::ZeroSize);
        }
        let required = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
        if size < required {
            return Err(BezoutError::SizeBelowDegree { size, required });
        }
        Ok(BezoutPair { f, g, size })
    }

    /// Smallest valid size: `max(deg f, deg g)`, bumped to 1 for a pair of
    /// constants.
    pub fn with_default_size(f: Polynomial, g: Polynomial) -> Result<Self, BezoutError> {
        let size = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0)).max(1);
        BezoutPair::new(f, g, size)
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The true maximal degree `m`, ignoring a zero member.
    pub fn max_degree(&self) -> usize {
        self.f
            .degree()
            .into_iter()
            .chain(self.g.degree())
            .max()
            .expect("pair is not both zero")
    }

    /// Same pair at another working size.
    pub fn resized(&self, size: usize) -> Result<Self, BezoutError> {
        BezoutPair::new(self.f.clone(), self.g.clone(), size)
    }
}

fn hankel_of(pair: &BezoutPair, p: &Polynomial) -> ExactMatrix {
    hankel(p, pair.size).expect("pair size bounds the degree")
}

fn toeplitz_of(pair: &BezoutPair, p: &Polynomial) -> ExactMatrix {
    toeplitz(p, pair.size).expect("pair size bounds the degree")
}

/// The Bezoutian from its definition: exact division of
/// `f(z)g(w) - f(w)g(z)` by `(z - w)`, with the quotient's coefficients
/// arranged as an `n x n` matrix (entry `(j, k)` multiplies `z^j w^k`).
pub fn bezoutian_divided_difference(pair: &BezoutPair) -> ExactMatrix {
    let n = pair.size;
    // Numerator as a polynomial in z whose coefficients are polynomials
    // in w: coefficient i is f_i * g(w) - g_i * f(w).
    let numerator: Vec<Polynomial> = (0..=n)
        .map(|i| {
            let from_f = pair.g.scale(&pair.f.coeff(i));
            let from_g = pair.f.scale(&pair.g.coeff(i));
            &from_f - &from_g
        })
        .collect();
    // Synthetic division by (z - w); shifting by one w-power multiplies
    // by w. The remainder must vanish because the numerator vanishes on
    // the diagonal z = w.
    let mut quotient = vec![Polynomial::zero(); n];
    quotient[n - 1] = numerator[n].clone();
    for i in (1..n).rev() {
        quotient[i - 1] = &numerator[i] + &quotient[i].shift_up(1);
    }
    let remainder = &numerator[0] + &quotient[0].shift_up(1);
    assert!(
        remainder.is_zero(),
        "divided-difference division left a remainder; this is a bug"
    );
    ExactMatrix::from_fn(n, n, |j, k| quotient[j].coeff(k))
}

/// The Bezoutian from the coefficient formula `H_f T_g - H_g T_f`.
pub fn bezoutian_hankel_toeplitz(pair: &BezoutPair) -> ExactMatrix {
    let left = hankel_of(pair, &pair.f)
        .mul(&toeplitz_of(pair, &pair.g))
        .expect("square same-size blocks");
    let right = hankel_of(pair, &pair.g)
        .mul(&toeplitz_of(pair, &pair.f))
        .expect("square same-size blocks");
    left.sub(&right).expect("same shape")
}

/// The `2n x 2n` resultant block matrix `[[T_f, Z H_f], [T_g, Z H_g]]`.
pub fn resultant_matrix(pair: &BezoutPair) -> ExactMatrix {
    let z = reverse_identity(pair.size).expect("size is positive");
    let top_right = z.mul(&hankel_of(pair, &pair.f)).expect("same size");
    let bottom_right = z.mul(&hankel_of(pair, &pair.g)).expect("same size");
    ExactMatrix::from_blocks(
        &toeplitz_of(pair, &pair.f),
        &top_right,
        &toeplitz_of(pair, &pair.g),
        &bottom_right,
    )
    .expect("blocks share the pair size")
}

/// Checks `R V_2n(z) = [f(z) V_n(z); g(z) V_n(z)]` at one point, exactly.
pub fn verify_resultant_action(pair: &BezoutPair, z: &Rational) -> bool {
    let n = pair.size;
    let resultant = resultant_matrix(pair);
    let tall = vandermonde_column(2 * n, z).expect("size is positive");
    let lhs = resultant.mul(&tall).expect("column fits");
    let short = vandermonde_column(n, z).expect("size is positive");
    let f_at = pair.f.eval(z);
    let g_at = pair.g.eval(z);
    (0..n).all(|j| lhs[(j, 0)] == &short[(j, 0)] * &f_at)
        && (0..n).all(|j| lhs[(n + j, 0)] == &short[(j, 0)] * &g_at)
}

/// Checks the congruence `R^T [[0, Z], [-Z, 0]] R = [[0, -B], [B, 0]]`
/// with `B` built by divided difference.
pub fn verify_congruence(pair: &BezoutPair) -> bool {
    let n = pair.size;
    let resultant = resultant_matrix(pair);
    let z = reverse_identity(n).expect("size is positive");
    let zero = ExactMatrix::zeros(n, n);
    let pivot = ExactMatrix::from_blocks(&zero, &z, &z.neg(), &zero).expect("same size blocks");
    let lhs = resultant
        .transpose()
        .mul(&pivot)
        .and_then(|m| m.mul(&resultant))
        .expect("shapes agree");
    let bezoutian = bezoutian_divided_difference(pair);
    let rhs = ExactMatrix::from_blocks(&zero, &bezoutian.neg(), &bezoutian, &zero)
        .expect("same size blocks");
    lhs == rhs
}

/// Checks the block factorization
/// `[[I, 0], [T_f, Z H_f]] R =
///  [[0, I], [Z, T_f + Z H_g]] [[B, 0], [0, I]] [[I, 0], [T_f, Z H_f]]`,
/// which needs `deg f = n` so that `H_f` (hence the outer factors) is
/// invertible and forces the two nullities equal.
pub fn verify_block_factorization(pair: &BezoutPair) -> Result<bool, BezoutError> {
    let n = pair.size;
    if pair.f.degree() != Some(n) {
        return Err(BezoutError::FullDegreeRequired {
            size: n,
            degree: pair.f.degree(),
        });
    }
    let identity = ExactMatrix::identity(n);
    let zero = ExactMatrix::zeros(n, n);
    let z = reverse_identity(n).expect("size is positive");
    let t_f = toeplitz_of(pair, &pair.f);
    let z_h_f = z.mul(&hankel_of(pair, &pair.f)).expect("same size");
    let z_h_g = z.mul(&hankel_of(pair, &pair.g)).expect("same size");
    let bezoutian = bezoutian_hankel_toeplitz(pair);

    let lower = ExactMatrix::from_blocks(&identity, &zero, &t_f, &z_h_f).expect("same size");
    let lhs = lower.mul(&resultant_matrix(pair)).expect("shapes agree");

    let corner = t_f.add(&z_h_g).expect("same shape");
    let outer = ExactMatrix::from_blocks(&zero, &identity, &z, &corner).expect("same size");
    let middle = ExactMatrix::from_blocks(&bezoutian, &zero, &zero, &identity).expect("same size");
    let rhs = outer
        .mul(&middle)
        .and_then(|m| m.mul(&lower))
        .expect("shapes agree");
    Ok(lhs == rhs)
}

/// The explicit kernel of the multiplication map `(u, v) -> f u + g v` on
/// pairs of degree `< n`, whose matrix in standard bases is `R^T`.
///
/// With `h = gcd(f, g)` and cofactors `f = f_cof h`, `g = g_cof h`, the
/// kernel is spanned by `(u, v) = (-g_cof q, f_cof q)` with `q` running
/// over the monomials of degree `< (n - m) + deg h`. Each vector stacks
/// the length-`n` coefficient vectors of `u` and `v`; they are kept in
/// that raw shape rather than echelon-normalized.
pub fn multiplication_kernel(pair: &BezoutPair) -> Result<KernelBasis, BezoutError> {
    if pair.f.is_zero() || pair.g.is_zero() {
        return Err(BezoutError::ZeroOperand);
    }
    let n = pair.size;
    let parts = cofactors(&pair.f, &pair.g).expect("pair is not both zero");
    let gcd_degree = parts.gcd.degree().expect("gcd of a nonzero pair is nonzero");
    let count = (n - pair.max_degree()) + gcd_degree;
    let vectors = (0..count)
        .map(|j| {
            let u = -&parts.g_cofactor.shift_up(j);
            let v = parts.f_cofactor.shift_up(j);
            let mut x: Vec<Rational> = (0..n).map(|i| u.coeff(i)).collect();
            x.extend((0..n).map(|i| v.coeff(i)));
            x
        })
        .collect();
    Ok(KernelBasis {
        dim: 2 * n,
        vectors,
    })
}

/// The outputs of the nullity/gcd correspondence for one pair, all
/// computed independently and cross-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport {
    /// Working size `n`.
    pub size: usize,
    /// True maximal degree `m`.
    pub max_degree: usize,
    pub bezoutian_nullity: usize,
    pub resultant_nullity: usize,
    /// Degree of the Euclidean gcd.
    pub gcd_degree: usize,
    /// `n - m`, the multiplicity of the shared zero at infinity.
    pub infinity_multiplicity: usize,
    /// `gcd_degree + infinity_multiplicity`.
    pub total_common_zeros: usize,
    /// The monic Euclidean gcd itself.
    pub gcd: Polynomial,
}

impl GcdReport {
    pub fn to_json(&self) -> Value {
        json!({
            "size": self.size,
            "max_degree": self.max_degree,
            "bezoutian_nullity": self.bezoutian_nullity,
            "resultant_nullity": self.resultant_nullity,
            "gcd_degree": self.gcd_degree,
            "infinity_multiplicity": self.infinity_multiplicity,
            "total_common_zeros": self.total_common_zeros,
            "gcd": self
                .gcd
                .coeffs()
                .iter()
                .map(crate::rational::format_rational)
                .collect::<Vec<_>>(),
        })
    }
}

/// Computes both nullities and the Euclidean gcd independently, then
/// cross-checks the equalities tying them together. A failed check comes
/// back as [`BezoutError::TheoremViolation`] and indicates a bug, not bad
/// input.
pub fn gcd_report(pair: &BezoutPair) -> Result<GcdReport, BezoutError> {
    let bezoutian_nullity = linalg::nullity(&bezoutian_hankel_toeplitz(pair));
    let resultant_nullity = linalg::nullity(&resultant_matrix(pair));
    let gcd = pair.f.gcd(&pair.g).expect("pair is not both zero");
    let gcd_degree = gcd.degree().expect("gcd of a nonzero pair is nonzero");
    let size = pair.size;
    let max_degree = pair.max_degree();
    let infinity_multiplicity = size - max_degree;
    let report = GcdReport {
        size,
        max_degree,
        bezoutian_nullity,
        resultant_nullity,
        gcd_degree,
        infinity_multiplicity,
        total_common_zeros: gcd_degree + infinity_multiplicity,
        gcd,
    };
    if report.bezoutian_nullity != report.resultant_nullity {
        return Err(BezoutError::TheoremViolation(format!(
            "nullity(B) = {} but nullity(R) = {} (n = {size}, m = {max_degree})",
            report.bezoutian_nullity, report.resultant_nullity
        )));
    }
    if report.bezoutian_nullity != report.total_common_zeros {
        return Err(BezoutError::TheoremViolation(format!(
            "nullity(B) = {} but (n - m) + deg gcd = {} (n = {size}, m = {max_degree}, deg gcd = {})",
            report.bezoutian_nullity, report.total_common_zeros, report.gcd_degree
        )));
    }
    Ok(report)
}

/// Checks that the Bezoutian at a larger size is the smaller one embedded
/// in the top-left corner with zero padding elsewhere.
pub fn padding_consistent(
    f: &Polynomial,
    g: &Polynomial,
    n_small: usize,
    n_big: usize,
) -> Result<bool, BezoutError> {
    if n_big < n_small {
        return Err(BezoutError::SizeOrder {
            small: n_small,
            big: n_big,
        });
    }
    let small = bezoutian_hankel_toeplitz(&BezoutPair::new(f.clone(), g.clone(), n_small)?);
    let big = bezoutian_hankel_toeplitz(&BezoutPair::new(f.clone(), g.clone(), n_big)?);
    for j in 0..n_big {
        for k in 0..n_big {
            let expected = if j < n_small && k < n_small {
                small[(j, k)].clone()
            } else {
                Rational::zero()
            };
            if big[(j, k)] != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Degree of the gcd of the two degree-`n` homogenizations, computed
/// constructively: factor out the shared power of the homogenizing
/// variable, then run the Euclidean algorithm on the dehomogenized parts.
/// This counts common zeros including the one at infinity.
pub fn homogenized_gcd_degree(
    f: &Polynomial,
    g: &Polynomial,
    n: usize,
) -> Result<usize, BezoutError> {
    if f.is_zero() || g.is_zero() {
        return Err(BezoutError::ZeroOperand);
    }
    BezoutPair::new(f.clone(), g.clone(), n)?;
    let f_bar = f.homogenize(n).expect("pair validated the size");
    let g_bar = g.homogenize(n).expect("pair validated the size");
    let shared_power = f_bar.y_multiplicity().min(g_bar.y_multiplicity());
    let f_part = f_bar
        .divide_y_power(shared_power)
        .expect("shared power is a lower bound")
        .dehomogenize();
    let g_part = g_bar
        .divide_y_power(shared_power)
        .expect("shared power is a lower bound")
        .dehomogenize();
    let gcd = f_part.gcd(&g_part).expect("pair is not both zero");
    Ok(shared_power + gcd.degree().expect("gcd of a nonzero pair is nonzero"))
}
