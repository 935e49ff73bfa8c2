//! Random and planted test instances.
//!
//! Planted pairs are built as `(h * f_cof, h * g_cof)` with the cofactors
//! re-drawn until the Euclidean check confirms they are coprime, so the
//! true gcd degree is known by construction without biasing it.

use crate::bezout::BezoutPair;
use crate::poly::Polynomial;
use crate::rational::Rational;
use num_bigint::BigInt;
use rand::Rng;

/// A rational with numerator in `[-bound, bound]` and denominator in
/// `[1, bound]`, reduced.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: u64) -> Rational {
    let bound = bound.max(1) as i64;
    let numer = rng.gen_range(-bound..=bound);
    let denom = rng.gen_range(1..=bound);
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A polynomial of exactly the given degree (nonzero leading coefficient).
pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, degree: usize, bound: u64) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| random_rational(rng, bound)).collect();
    let mut lead = random_rational(rng, bound);
    while lead == Rational::new(BigInt::from(0), BigInt::from(1)) {
        lead = random_rational(rng, bound);
    }
    coeffs.push(lead);
    Polynomial::from_coeffs(coeffs)
}

/// A pair at its natural size `n = max(deg f, deg g)` (bumped to 1 for
/// constants), degrees drawn independently up to `max_degree`.
pub fn random_pair<R: Rng + ?Sized>(rng: &mut R, max_degree: usize, bound: u64) -> BezoutPair {
    let f_degree = rng.gen_range(0..=max_degree);
    let g_degree = rng.gen_range(0..=max_degree);
    let f = random_polynomial(rng, f_degree, bound);
    let g = random_polynomial(rng, g_degree, bound);
    BezoutPair::with_default_size(f, g).expect("members are nonzero")
}

/// A pair whose first member has full degree `n = max_degree`, as the
/// block factorization requires.
pub fn random_pair_full_f<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: usize,
    bound: u64,
) -> BezoutPair {
    let n = max_degree.max(1);
    let f = random_polynomial(rng, n, bound);
    let g_degree = rng.gen_range(0..=n);
    let g = random_polynomial(rng, g_degree, bound);
    BezoutPair::new(f, g, n).expect("deg f = n bounds the pair")
}

/// A pair with a known gcd degree.
#[derive(Debug, Clone)]
pub struct PlantedPair {
    pub pair: BezoutPair,
    /// Degree of the planted common factor, hence of the true gcd.
    pub gcd_degree: usize,
}

/// Plants a common factor of exactly `gcd_degree` under cofactors of
/// exactly the given degrees; size is the natural `n = m`.
pub fn planted_pair<R: Rng + ?Sized>(
    rng: &mut R,
    gcd_degree: usize,
    f_cofactor_degree: usize,
    g_cofactor_degree: usize,
    bound: u64,
) -> PlantedPair {
    let factor = random_polynomial(rng, gcd_degree, bound);
    loop {
        let f_cof = random_polynomial(rng, f_cofactor_degree, bound);
        let g_cof = random_polynomial(rng, g_cofactor_degree, bound);
        let gcd = f_cof.gcd(&g_cof).expect("cofactors are nonzero");
        if gcd.degree() != Some(0) {
            continue;
        }
        let f = &f_cof * &factor;
        let g = &g_cof * &factor;
        let pair = BezoutPair::with_default_size(f, g).expect("members are nonzero");
        return PlantedPair { pair, gcd_degree };
    }
}
