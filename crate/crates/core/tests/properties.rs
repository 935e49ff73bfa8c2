//! Randomized algebraic properties: the ring and gcd laws of the
//! polynomial layer, the structured-matrix identities, exactness of the
//! elimination routines, and the nullity/gcd correspondence on planted
//! instances. Everything asserts exact equality; there are no tolerances
//! anywhere.

mod common;

use bezout_core::{
    batch, bezout, instances, kernel_basis, linalg, nullity, parse_polynomial, rank,rational_int,
    structured, BezoutPair, ExactMatrix, Polynomial, Rational,
};
use common::{minor_rank, random_matrix};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rational_strategy(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound)
        .prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly_strategy(max_len: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational_strategy(bound), 0..=max_len)
        .prop_map(Polynomial::from_coeffs)
}

proptest! {
    #[test]
    fn gcd_divides_both_and_cofactors_are_coprime(
        f in poly_strategy(7, 9),
        g in poly_strategy(7, 9),
    ) {
        prop_assume!(!f.is_zero() || !g.is_zero());
        let parts = bezout_core::cofactors(&f, &g).unwrap();
        prop_assert_eq!(&(&parts.f_cofactor * &parts.gcd), &f);
        prop_assert_eq!(&(&parts.g_cofactor * &parts.gcd), &g);
        let cofactor_gcd = parts.f_cofactor.gcd(&parts.g_cofactor).unwrap();
        prop_assert_eq!(cofactor_gcd, Polynomial::one());
    }

    #[test]
    fn eval_respects_ring_structure(
        f in poly_strategy(6, 9),
        g in poly_strategy(6, 9),
        z in rational_strategy(9),
    ) {
        prop_assert_eq!((&f * &g).eval(&z), f.eval(&z) * g.eval(&z));
        prop_assert_eq!((&f + &g).eval(&z), f.eval(&z) + g.eval(&z));
    }

    #[test]
    fn printing_then_parsing_is_the_identity(p in poly_strategy(8, 20)) {
        let printed = p.to_expression('z');
        prop_assert_eq!(parse_polynomial(&printed, 'z').unwrap(), p);
    }

    #[test]
    fn toeplitz_transpose_identity(f in poly_strategy(9, 9), extra in 0usize..8) {
        // T_f^T = Z T_f Z at any valid size up to 16.
        let n = f.degree().unwrap_or(0).max(1) + extra;
        let t = structured::toeplitz(&f, n).unwrap();
        let z = structured::reverse_identity(n).unwrap();
        let conjugated = z.mul(&t).unwrap().mul(&z).unwrap();
        prop_assert_eq!(t.transpose(), conjugated);
    }

    #[test]
    fn structured_families_commute(
        f in poly_strategy(7, 9),
        g in poly_strategy(7, 9),
        extra in 0usize..4,
    ) {
        let n = f
            .degree()
            .unwrap_or(0)
            .max(g.degree().unwrap_or(0))
            .max(1)
            + extra;
        let t_f = structured::toeplitz(&f, n).unwrap();
        let t_g = structured::toeplitz(&g, n).unwrap();
        prop_assert_eq!(t_f.mul(&t_g).unwrap(), t_g.mul(&t_f).unwrap());

        let h_f = structured::hankel(&f, n).unwrap();
        let h_g = structured::hankel(&g, n).unwrap();
        let z = structured::reverse_identity(n).unwrap();
        let left = h_f.mul(&z).unwrap().mul(&h_g).unwrap();
        let right = h_g.mul(&z).unwrap().mul(&h_f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hankel_matrices_are_symmetric(f in poly_strategy(9, 9), extra in 0usize..4) {
        let n = f.degree().unwrap_or(0).max(1) + extra;
        let h = structured::hankel(&f, n).unwrap();
        prop_assert_eq!(h.transpose(), h);
    }
}

#[test]
fn kernel_vectors_are_annihilated_and_span_the_nullity() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..60 {
        let rows = rng.gen_range(1..=9);
        let cols = rng.gen_range(1..=9);
        let m = random_matrix(&mut rng, rows, cols, 6);
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), nullity(&m));
        for v in &basis.vectors {
            assert!(linalg::apply(&m, v).iter().all(Rational::is_zero));
        }
        if !basis.is_empty() {
            assert_eq!(rank(&basis.as_matrix()), basis.len());
        }
    }
}

#[test]
fn rank_equals_rank_of_transpose() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..40 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let m = random_matrix(&mut rng, rows, cols, 8);
        assert_eq!(rank(&m), rank(&m.transpose()));
    }
}

#[test]
fn rank_is_invariant_under_row_swaps_and_scaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..40 {
        let rows = rng.gen_range(2..=8);
        let cols = rng.gen_range(1..=8);
        let m = random_matrix(&mut rng, rows, cols, 6);
        let baseline = rank(&m);

        let a = rng.gen_range(0..rows);
        let b = rng.gen_range(0..rows);
        let scaled_row = rng.gen_range(0..rows);
        let scale = Rational::new(
            BigInt::from(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 }),
            BigInt::from(rng.gen_range(1..=9)),
        );
        let transformed = ExactMatrix::from_fn(rows, cols, |r, c| {
            let source = if r == a {
                b
            } else if r == b {
                a
            } else {
                r
            };
            let entry = m[(source, c)].clone();
            if source == scaled_row {
                entry * &scale
            } else {
                entry
            }
        });
        assert_eq!(rank(&transformed), baseline);
    }
}

#[test]
fn rank_matches_the_minor_oracle_on_small_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for _ in 0..30 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let m = random_matrix(&mut rng, rows, cols, 5);
        assert_eq!(rank(&m), minor_rank(&m), "mismatch on {m:?}");
    }
}

fn random_valid_pair(rng: &mut ChaCha8Rng, max_degree: usize, bound: u64) -> BezoutPair {
    // Also exercise oversized working sizes and a zero member now and then.
    let pair = instances::random_pair(rng, max_degree, bound);
    if rng.gen_bool(0.15) {
        let f = pair.f().clone();
        let zeroed = BezoutPair::new(f, Polynomial::zero(), pair.size().max(1));
        if let Ok(p) = zeroed {
            return p;
        }
    }
    if rng.gen_bool(0.3) {
        let bump = rng.gen_range(1..=3);
        return pair.resized(pair.size() + bump).unwrap();
    }
    pair
}

#[test]
fn both_bezoutian_routes_agree_and_are_symmetric() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..60 {
        let pair = random_valid_pair(&mut rng, 8, 100);
        let direct = bezout::bezoutian_divided_difference(&pair);
        let assembled = bezout::bezoutian_hankel_toeplitz(&pair);
        assert_eq!(direct, assembled);
        assert_eq!(direct.transpose(), direct);
    }
}

#[test]
fn bezoutian_reconstructs_the_divided_difference_pointwise() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for _ in 0..25 {
        let pair = random_valid_pair(&mut rng, 5, 9);
        let n = pair.size();
        let b = bezout::bezoutian_divided_difference(&pair);
        let offset_z = instances::random_rational(&mut rng, 9);
        let offset_w = instances::random_rational(&mut rng, 9);
        // 2n + 1 distinct points per variable pin the polynomial identity.
        for i in 0..=2 * n {
            for j in 0..=2 * n {
                let z = &offset_z + rational_int(i as i64);
                let w = &offset_w + rational_int(j as i64);
                let col_z = structured::vandermonde_column(n, &z).unwrap();
                let col_w = structured::vandermonde_column(n, &w).unwrap();
                let form = col_z.transpose().mul(&b).unwrap().mul(&col_w).unwrap();
                let lhs = &form[(0, 0)] * (&z - &w);
                let rhs = pair.f().eval(&z) * pair.g().eval(&w)
                    - pair.f().eval(&w) * pair.g().eval(&z);
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn swapping_the_pair_negates_the_bezoutian() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..40 {
        let pair = random_valid_pair(&mut rng, 8, 20);
        let swapped = BezoutPair::new(pair.g().clone(), pair.f().clone(), pair.size()).unwrap();
        assert_eq!(
            bezout::bezoutian_divided_difference(&swapped),
            bezout::bezoutian_divided_difference(&pair).neg()
        );
    }
}

#[test]
fn identity_chain_holds_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let jobs: Vec<batch::IdentityJob> = (0..40)
        .map(|_| {
            let pair = instances::random_pair_full_f(&mut rng, 6, 9);
            let points = (0..10).map(|_| instances::random_rational(&mut rng, 9)).collect();
            batch::IdentityJob { pair, points }
        })
        .collect();
    for outcome in batch::check_identity_batch(&jobs) {
        let outcome = outcome.expect("full-degree pairs satisfy the precondition");
        assert!(outcome.resultant_action);
        assert!(outcome.congruence);
        assert!(outcome.block_factorization);
    }
}

#[test]
fn planted_instances_satisfy_the_nullity_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..40 {
        let gcd_degree = rng.gen_range(0..=3);
        let f_cof = rng.gen_range(0..=5);
        let g_cof = rng.gen_range(0..=5);
        let planted = instances::planted_pair(&mut rng, gcd_degree, f_cof, g_cof, 9);
        let report = bezout::gcd_report(&planted.pair).unwrap();
        assert_eq!(report.gcd_degree, planted.gcd_degree);
        assert_eq!(report.bezoutian_nullity, planted.gcd_degree);
        assert_eq!(report.resultant_nullity, planted.gcd_degree);
        assert_eq!(report.infinity_multiplicity, 0);
    }
}

#[test]
fn oversized_planted_instances_pick_up_the_infinity_surplus() {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    for _ in 0..15 {
        let gcd_degree = rng.gen_range(0..=3);
        let planted = instances::planted_pair(&mut rng, gcd_degree, 3, 2, 9);
        let m = planted.pair.max_degree();
        for bump in 1..=3 {
            let oversized = planted.pair.resized(m + bump).unwrap();
            let report = bezout::gcd_report(&oversized).unwrap();
            assert_eq!(report.bezoutian_nullity, bump + gcd_degree);
            assert_eq!(report.resultant_nullity, bump + gcd_degree);
            assert_eq!(report.infinity_multiplicity, bump);
            assert_eq!(report.total_common_zeros, bump + gcd_degree);
        }
    }
}

#[test]
fn parametrized_kernel_is_a_full_basis_for_the_resultant_transpose() {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for _ in 0..25 {
        let gcd_degree = rng.gen_range(0..=3);
        let planted = instances::planted_pair(&mut rng, gcd_degree, 3, 3, 9);
        let pair = if rng.gen_bool(0.5) {
            let bump = rng.gen_range(1..=3);
            planted.pair.resized(planted.pair.max_degree() + bump).unwrap()
        } else {
            planted.pair
        };
        let basis = bezout::multiplication_kernel(&pair).unwrap();
        let transpose = bezout::resultant_matrix(&pair).transpose();
        for v in &basis.vectors {
            assert!(linalg::apply(&transpose, v).iter().all(Rational::is_zero));
        }
        assert_eq!(basis.len(), nullity(&transpose));
        if !basis.is_empty() {
            assert_eq!(rank(&basis.as_matrix()), basis.len());
        }
    }
}

#[test]
fn padding_embeds_smaller_bezoutians() {
    let mut rng = ChaCha8Rng::seed_from_u64(112);
    for _ in 0..30 {
        let pair = instances::random_pair(&mut rng, 6, 9);
        let m = pair.max_degree().max(1);
        let n_small = m + rng.gen_range(0..=2);
        let n_big = n_small + rng.gen_range(0..=3);
        assert_eq!(
            bezout::padding_consistent(pair.f(), pair.g(), n_small, n_big),
            Ok(true)
        );
    }
}

#[test]
fn homogenized_gcd_degree_matches_the_bezoutian_nullity() {
    let mut rng = ChaCha8Rng::seed_from_u64(113);
    for _ in 0..30 {
        let pair = instances::random_pair(&mut rng, 6, 9);
        let n = pair.max_degree().max(1) + rng.gen_range(0..=3);
        let resized = pair.resized(n).unwrap();
        let report = bezout::gcd_report(&resized).unwrap();
        assert_eq!(
            bezout::homogenized_gcd_degree(pair.f(), pair.g(), n),
            Ok(report.bezoutian_nullity)
        );
    }
}
