//! Exact Bezoutian and resultant matrices of univariate polynomial pairs.
//!
//! Everything runs over arbitrary-precision rationals, so ranks, nullities,
//! and kernels are exact and the central equality — the nullity of the
//! Bezoutian (equivalently, of the resultant) equals the number of common
//! zeros of the pair, counting the zero at infinity — can be checked with
//! zero tolerance.
//!
//! Module map:
//!
//! * [`rational`], [`poly`], [`parser`] — exact scalars, dense univariate
//!   polynomials (Euclidean gcd, cofactors, homogenization), and the
//!   expression parser behind the CLI;
//! * [`matrix`], [`structured`] — dense rational matrices plus the Hankel,
//!   Toeplitz, reverse-identity, nilpotent, and power-column builders;
//! * [`linalg`] — fraction-free rank, nullity, and kernel bases;
//! * [`bezout`] — both Bezoutian constructions, the resultant, the
//!   identity-chain checks, the explicit multiplication kernel, and
//!   [`bezout::gcd_report`];
//! * [`instances`], [`batch`] — seeded generators and order-preserving
//!   batch evaluation (rayon under the default `parallel` feature).

pub mod batch;
pub mod bezout;
pub mod instances;
pub mod linalg;
pub mod matrix;
pub mod parser;
pub mod poly;
pub mod rational;
pub mod structured;

pub use bezout::{
    bezoutian_divided_difference, bezoutian_hankel_toeplitz, gcd_report, homogenized_gcd_degree,
    multiplication_kernel, padding_consistent, resultant_matrix, verify_block_factorization,
    verify_congruence, verify_resultant_action, BezoutError, BezoutPair, GcdReport,
};
pub use linalg::{kernel_basis, nullity, rank, KernelBasis};
pub use matrix::{ExactMatrix, MatrixError};
pub use parser::{parse_polynomial, ParseError, ParseErrorKind};
pub use poly::{cofactors, GcdFactorization, HomogeneousPoly, PolyError, Polynomial};
pub use rational::{format_rational, parse_rational, rational, rational_int, Rational};
