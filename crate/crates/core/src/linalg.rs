//! Exact rank, nullity, and kernel bases over the rationals.
//!
//! Rank runs fraction-free: each row is scaled to integers by the lcm of
//! its denominators (rank is invariant under nonzero row scaling), then
//! Bareiss two-term elimination keeps every intermediate entry an exact
//! minor of the scaled matrix, so integer growth stays polynomial. Pivot
//! choice is the first row with a nonzero entry in the current column;
//! magnitude pivoting buys nothing when arithmetic is exact.
//!
//! Kernel bases come from a separate reduced-row-echelon pass over the
//! rationals, which keeps the two routes independently checkable.

use crate::matrix::ExactMatrix;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A spanning set for the null space of a matrix.
///
/// `dim` is the ambient dimension (the matrix column count). Vectors
/// produced by [`kernel_basis`] are echelon-normalized: each has entry one
/// at its own free coordinate and zeros at the other free coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub dim: usize,
    pub vectors: Vec<Vec<Rational>>,
}

impl KernelBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Stacks the basis vectors as matrix rows.
    pub fn as_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.vectors.len(), self.dim, |r, c| {
            self.vectors[r][c].clone()
        })
    }
}

/// Scales each row by the lcm of its denominators.
fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let scale = row
                .iter()
                .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            row.iter()
                .map(|e| e.numer() * (&scale / e.denom()))
                .collect()
        })
        .collect()
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut last_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let numerator = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = numerator.div_rem(&last_pivot);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        last_pivot = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Exact rank. Zero for the empty or all-zero matrix.
pub fn rank(m: &ExactMatrix) -> usize {
    bareiss_rank(integer_rows(m))
}

/// `cols - rank`, the dimension of the null space.
pub fn nullity(m: &ExactMatrix) -> usize {
    m.cols() - rank(m)
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
fn reduce(m: &mut ExactMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        if row == m.rows() {
            break;
        }
        let Some(pivot_row) = (row..m.rows()).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        for c in 0..m.cols() {
            let tmp = m[(pivot_row, c)].clone();
            m[(pivot_row, c)] = m[(row, c)].clone();
            m[(row, c)] = tmp;
        }
        let inv = m[(row, col)].recip();
        for c in col..m.cols() {
            let scaled = &m[(row, c)] * &inv;
            m[(row, c)] = scaled;
        }
        for r in 0..m.rows() {
            if r == row || m[(r, col)].is_zero() {
                continue;
            }
            let factor = m[(r, col)].clone();
            for c in col..m.cols() {
                let delta = &factor * &m[(row, c)];
                m[(r, c)] -= delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of `{ x : M x = 0 }`, one vector per free column, each normalized
/// to have entry one at its free coordinate.
pub fn kernel_basis(m: &ExactMatrix) -> KernelBasis {
    let mut echelon = m.clone();
    let pivots = reduce(&mut echelon);
    let cols = m.cols();
    let mut vectors = Vec::with_capacity(cols - pivots.len());
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -echelon[(r, free)].clone();
        }
        vectors.push(v);
    }
    KernelBasis { dim: cols, vectors }
}

/// Applies `M` to a coordinate vector.
pub fn apply(m: &ExactMatrix, x: &[Rational]) -> Vec<Rational> {
    assert_eq!(m.cols(), x.len(), "dimension mismatch");
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .zip(x)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
