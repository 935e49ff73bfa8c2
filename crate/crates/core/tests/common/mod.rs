//! Shared helpers for the integration suites: an elimination-free rank
//! oracle (largest square submatrix with nonzero determinant) and seeded
//! random matrices. The oracle deliberately shares no code path with the
//! library's elimination.

use bezout_core::{ExactMatrix, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn naive_determinant(m: &ExactMatrix) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Rational::from_integer(BigInt::from(1));
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut det = Rational::zero();
    for col in 0..n {
        if m[(0, col)].is_zero() {
            continue;
        }
        let minor = ExactMatrix::from_fn(n - 1, n - 1, |r, c| {
            m[(r + 1, if c < col { c } else { c + 1 })].clone()
        });
        let term = &m[(0, col)] * &naive_determinant(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn subsets_of_size(universe: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(start: usize, universe: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..universe {
            current.push(i);
            recurse(i + 1, universe, size, current, out);
            current.pop();
        }
    }
    recurse(0, universe, size, &mut current, &mut out);
    out
}

/// Brute-force rank: the largest `k` such that some `k x k` submatrix has
/// a nonzero determinant.
pub fn minor_rank(m: &ExactMatrix) -> usize {
    let max = m.rows().min(m.cols());
    for k in (1..=max).rev() {
        for rows in subsets_of_size(m.rows(), k) {
            for cols in subsets_of_size(m.cols(), k) {
                let sub = ExactMatrix::from_fn(k, k, |r, c| m[(rows[r], cols[c])].clone());
                if !naive_determinant(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Random matrix with small rational entries (and a sprinkling of zeros,
/// so degenerate ranks actually occur).
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(0.3) {
            Rational::zero()
        } else {
            Rational::new(
                BigInt::from(rng.gen_range(-bound..=bound)),
                BigInt::from(rng.gen_range(1..=bound.max(1))),
            )
        }
    })
}
