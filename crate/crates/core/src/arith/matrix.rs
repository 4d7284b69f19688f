//! Dense matrices: scalar matrices with exact rank computation, and
//! matrices of binary forms with a per-entry twist profile.

use crate::arith::form::BinaryForm;
use crate::arith::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A dense matrix of field elements with exact Gaussian elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarMat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> ScalarMat {
        ScalarMat {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn from_rows(rows_data: Vec<Vec<Scalar>>) -> ScalarMat {
        let rows = rows_data.len();
        let cols = rows_data.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows_data.iter().all(|r| r.len() == cols));
        ScalarMat {
            rows,
            cols,
            data: rows_data.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..cols {
            let pivot = (row..rows).find(|&r| !m[r * cols + col].is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for j in 0..cols {
                    m.swap(row * cols + j, pivot * cols + j);
                }
            }
            let inv = m[row * cols + col].inv().expect("nonzero pivot");
            for r in row + 1..rows {
                let lead = m[r * cols + col].clone();
                if lead.is_zero() {
                    continue;
                }
                let factor = lead.try_mul(&inv).expect("same field");
                for j in col..cols {
                    let t = factor.try_mul(&m[row * cols + j]).expect("same field");
                    m[r * cols + j] = m[r * cols + j].try_sub(&t).expect("same field");
                }
            }
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    /// Dimension of the kernel of the matrix as a linear map on column
    /// vectors.
    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Inverse of a square matrix by Gauss-Jordan elimination; `None` when
    /// singular.
    pub fn inverse(&self) -> Option<ScalarMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let field = self.data[0].field();
        let mut m = self.data.clone();
        let mut inv = ScalarMat::zero(field, n, n);
        for i in 0..n {
            inv.set(i, i, field.one());
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r * n + col].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    m.swap(col * n + j, pivot * n + j);
                    let a = inv.get(col, j).clone();
                    let b = inv.get(pivot, j).clone();
                    inv.set(col, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let scale = m[col * n + col].inv().expect("nonzero pivot");
            for j in 0..n {
                m[col * n + j] = m[col * n + j].try_mul(&scale).expect("same field");
                let v = inv.get(col, j).try_mul(&scale).expect("same field");
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col || m[r * n + col].is_zero() {
                    continue;
                }
                let factor = m[r * n + col].clone();
                for j in 0..n {
                    let t = factor.try_mul(&m[col * n + j]).expect("same field");
                    m[r * n + j] = m[r * n + j].try_sub(&t).expect("same field");
                    let t = factor.try_mul(inv.get(col, j)).expect("same field");
                    let v = inv.get(r, j).try_sub(&t).expect("same field");
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc: Option<Scalar> = None;
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if e.is_zero() || v[j].is_zero() {
                        continue;
                    }
                    let t = e.try_mul(&v[j]).expect("same field");
                    acc = Some(match acc {
                        Some(a) => a.try_add(&t).expect("same field"),
                        None => t,
                    });
                }
                acc.unwrap_or_else(|| {
                    v.first()
                        .map(|s| s.field())
                        .unwrap_or(Field::Rational)
                        .zero()
                })
            })
            .collect()
    }
}

/// A dense matrix of binary forms. Twist discipline is imposed by a
/// profile: entry `(i, j)` must either carry exactly the profiled twist or
/// be identically zero (structurally so when the profiled twist is
/// negative).
#[derive(Clone, Debug, PartialEq)]
pub struct FormMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BinaryForm>,
}

impl FormMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BinaryForm>) -> Result<FormMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::invalid(
                "entries",
                format!("expected {} entries, got {}", rows * cols, entries.len()),
            ));
        }
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("dimensions", "matrix must be nonempty"));
        }
        let field = entries[0].field();
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                "mixed entry fields".into(),
            ));
        }
        Ok(FormMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BinaryForm,
    ) -> FormMatrix {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        FormMatrix::new(rows, cols, entries).expect("consistent entries")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &BinaryForm {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BinaryForm) {
        self.entries[i * self.cols + j] = v;
    }

    /// Check entries against a twist profile and normalize zero entries to
    /// the canonical zero of the profiled twist.
    pub fn enforce_profile(&mut self, profile: impl Fn(usize, usize) -> i64) -> Result<()> {
        let field = self.field();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = profile(i, j);
                let e = self.get(i, j);
                if e.is_zero() {
                    self.set(i, j, BinaryForm::zero(field, want));
                } else if want < 0 {
                    return Err(Error::TwistMismatch {
                        context: "structurally-zero slot holds a nonzero form",
                        expected: want,
                        found: e.twist(),
                    });
                } else if e.twist() != want {
                    return Err(Error::TwistMismatch {
                        context: "form matrix profile",
                        expected: want,
                        found: e.twist(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Matrix product over the form ring.
    pub fn mul(&self, other: &FormMatrix) -> FormMatrix {
        assert_eq!(self.cols, other.rows);
        let field = self.field();
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: Option<BinaryForm> = None;
                for t in 0..self.cols {
                    let a = self.get(i, t);
                    let b = other.get(t, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let p = a.mul(b);
                    acc = Some(match acc {
                        Some(s) => s.checked_add(&p).expect("twist-homogeneous product"),
                        None => p,
                    });
                }
                out.push(acc.unwrap_or_else(|| BinaryForm::zero(field, -1)));
            }
        }
        FormMatrix::new(self.rows, other.cols, out).expect("dimensions agree")
    }

    pub fn sub(&self, other: &FormMatrix) -> FormMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_sub(b).expect("twist-aligned difference"))
            .collect();
        FormMatrix::new(self.rows, self.cols, entries).expect("dimensions agree")
    }
}
