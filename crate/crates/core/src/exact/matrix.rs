use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num::Zero;

use super::rational::{format_rational, int, one, zero, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of rationals. Zero-extent shapes (`0 x n`,
/// `n x 0`) are valid values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        Error::check_dim("matrix entries", rows * cols, data.len())?;
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from row vectors. An empty slice gives a `0 x 0`
    /// matrix; use [`Matrix::zeros`] for `0 x n`.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            Error::check_dim("matrix row length", cols, r.len())?;
            data.extend(r.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given
    /// vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            Error::check_dim("matrix column length", rows, c.len())?;
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor for integer literals; panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
            .collect();
        Self::from_rows(&rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        (0..self.cols).map(move |j| self.column(j))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        Error::check_dim("matrix product", self.cols, rhs.rows)?;
        let mut out = Matrix::zeros(self.rows, rhs.cols);
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

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        Error::check_dim("matrix-vector product", self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| super::rational::dot(self.row(i), v))
            .collect())
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        Error::check_dim("horizontal stack", self.rows, rhs.rows)?;
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(rhs.row(i).iter().cloned());
        }
        Ok(Matrix {
            rows: self.rows,
            cols,
            data,
        })
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        Error::check_dim("vertical stack", self.cols, rhs.cols)?;
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for i in idx {
            data.extend(self.row(i).iter().cloned());
            rows += 1;
        }
        Matrix {
            rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m[(i, k)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-one())
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on incompatible shapes; see [`Matrix::checked_mul`].
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            write!(f, "[{}]", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
