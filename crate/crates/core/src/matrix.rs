//! Dense matrices of exact rationals.
//!
//! Row-major storage, value semantics. Sizes here are desk scale (a few
//! hundred at most), so there is no packed or structured storage; the
//! elimination routines want plain dense access.

use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::fmt;
use std::ops::{Index, IndexMut};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Malformed serialized matrix.
    Format(String),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::ShapeMismatch { left, right } => write!(
                f,
                "matrix shapes {}x{} and {}x{} are incompatible",
                left.0, left.1, right.0, right.1
            ),
            MatrixError::Format(msg) => write!(f, "bad matrix data: {msg}"),
        }
    }
}

impl std::error::Error for MatrixError {}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(entry(r, c));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor for tests and examples.
    pub fn from_integers(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix::from_fn(r, c, |i, j| crate::rational_int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn neg(&self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(MatrixError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Assembles `[[a, b], [c, d]]`; row and column counts must agree
    /// along each seam.
    pub fn from_blocks(
        a: &ExactMatrix,
        b: &ExactMatrix,
        c: &ExactMatrix,
        d: &ExactMatrix,
    ) -> Result<ExactMatrix, MatrixError> {
        let mismatch = |l: &ExactMatrix, r: &ExactMatrix| MatrixError::ShapeMismatch {
            left: (l.rows, l.cols),
            right: (r.rows, r.cols),
        };
        if a.rows != b.rows || c.rows != d.rows {
            return Err(mismatch(a, b));
        }
        if a.cols != c.cols || b.cols != d.cols {
            return Err(mismatch(a, c));
        }
        Ok(ExactMatrix::from_fn(
            a.rows + c.rows,
            a.cols + b.cols,
            |r, cidx| {
                match (r < a.rows, cidx < a.cols) {
                    (true, true) => a[(r, cidx)].clone(),
                    (true, false) => b[(r, cidx - a.cols)].clone(),
                    (false, true) => c[(r - a.rows, cidx)].clone(),
                    (false, false) => d[(r - a.rows, cidx - a.cols)].clone(),
                }
            },
        ))
    }

    /// The `rows x cols` block whose top-left corner sits at `(row, col)`.
    pub fn submatrix(&self, row: usize, col: usize, rows: usize, cols: usize) -> ExactMatrix {
        assert!(row + rows <= self.rows && col + cols <= self.cols, "block out of range");
        ExactMatrix::from_fn(rows, cols, |r, c| self[(row + r, col + c)].clone())
    }

    /// Right-aligned text grid of canonical rational strings.
    pub fn to_plain_text(&self) -> String {
        let strings: Vec<String> = self.entries.iter().map(format_rational).collect();
        let mut widths = vec![0usize; self.cols];
        for (i, s) in strings.iter().enumerate() {
            widths[i % self.cols] = widths[i % self.cols].max(s.len());
        }
        let mut out = String::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    out.push_str("  ");
                }
                let s = &strings[r * self.cols + c];
                for _ in 0..widths[c] - s.len() {
                    out.push(' ');
                }
                out.push_str(s);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{bmatrix}\n");
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            out.push_str("  ");
            out.push_str(&row.join(" & "));
            if r + 1 < self.rows {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{bmatrix}\n");
        out
    }

    /// `{rows, cols, entries}` with row-major entries as reduced rational
    /// strings; bit-exact across platforms.
    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<ExactMatrix, MatrixError> {
        let obj = value
            .as_object()
            .ok_or_else(|| MatrixError::Format("expected an object".into()))?;
        let dim = |key: &str| -> Result<usize, MatrixError> {
            obj.get(key)
                .and_then(Value::as_u64)
                .map(|v| v as usize)
                .ok_or_else(|| MatrixError::Format(format!("missing count field {key:?}")))
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;
        let raw = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| MatrixError::Format("missing entries array".into()))?;
        if raw.len() != rows * cols {
            return Err(MatrixError::Format(format!(
                "expected {} entries, found {}",
                rows * cols,
                raw.len()
            )));
        }
        let entries = raw
            .iter()
            .map(|e| {
                e.as_str()
                    .ok_or_else(|| MatrixError::Format("entries must be strings".into()))
                    .and_then(|s| {
                        parse_rational(s).map_err(|err| MatrixError::Format(err.to_string()))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.entries[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix({}x{})\n{}", self.rows, self.cols, self.to_plain_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_transpose() {
        let a = ExactMatrix::from_integers(&[&[0, 1], &[1, 0]]);
        let b = ExactMatrix::from_integers(&[&[-1, 1], &[0, -1]]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, ExactMatrix::from_integers(&[&[0, -1], &[-1, 1]]));
        assert_eq!(ab.transpose().transpose(), ab);
        assert!(a.mul(&ExactMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn block_assembly() {
        let i = ExactMatrix::identity(1);
        let z = ExactMatrix::zeros(1, 1);
        let m = ExactMatrix::from_blocks(&z, &i, &i, &z).unwrap();
        assert_eq!(m, ExactMatrix::from_integers(&[&[0, 1], &[1, 0]]));
        assert_eq!(m.submatrix(0, 1, 1, 1), i);
        assert!(ExactMatrix::from_blocks(&i, &ExactMatrix::zeros(2, 2), &i, &z).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = ExactMatrix::from_fn(2, 3, |r, c| crate::rational(r as i64 * 3 - 1, c as i64 + 2));
        let back = ExactMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn json_rejects_malformed_input() {
        assert!(ExactMatrix::from_json(&json!({"rows": 1, "cols": 2})).is_err());
        assert!(ExactMatrix::from_json(&json!({"rows": 1, "cols": 2, "entries": ["1"]})).is_err());
        assert!(ExactMatrix::from_json(
            &json!({"rows": 1, "cols": 1, "entries": ["1/0"]})
        )
        .is_err());
    }

    #[test]
    fn text_renderings() {
        let m = ExactMatrix::from_integers(&[&[1, -10], &[0, 2]]);
        assert_eq!(m.to_plain_text(), "1  -10\n0    2\n");
        assert_eq!(
            m.to_latex(),
            "\\begin{bmatrix}\n  1 & -10 \\\\\n  0 & 2\n\\end{bmatrix}\n"
        );
    }
}
