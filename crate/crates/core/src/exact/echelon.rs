//! Gauss-Jordan elimination over the rationals.
//!
//! Pivot choice is the first nonzero entry at or below the current row in
//! the leftmost remaining column, so the reduced form is a pure function
//! of the input matrix.

use num::Zero;

use super::matrix::Matrix;
use super::rational::{one, zero, Rational};
use crate::error::{Error, Result};

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

pub fn canonical_echelon(m: &Matrix) -> Echelon {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = one() / &a[(r, c)];
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let v = &a[(i, j)] - &factor * &a[(r, j)];
                a[(i, j)] = v;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    Echelon {
        reduced: a,
        rank: r,
        pivot_cols,
    }
}

pub fn rank(m: &Matrix) -> usize {
    canonical_echelon(m).rank
}

/// Canonical kernel basis as columns: one column per free variable, free
/// columns in increasing order, with that free variable set to one.
pub fn nullspace(m: &Matrix) -> Matrix {
    let cols = m.cols();
    let Echelon {
        reduced,
        pivot_cols,
        ..
    } = canonical_echelon(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Matrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = one();
        for (row, &p) in pivot_cols.iter().enumerate() {
            basis[(p, k)] = -reduced[(row, f)].clone();
        }
    }
    basis
}

/// Particular solution of `m x = b` with every free variable set to zero,
/// or `None` when the system is inconsistent.
pub fn solve_linear(m: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    Error::check_dim("right-hand side length", m.rows(), b.len())?;
    let rhs = Matrix::from_columns(m.rows(), &[b.to_vec()])?;
    let aug = m.hstack(&rhs)?;
    let ech = canonical_echelon(&aug);
    let last = m.cols();
    if ech.pivot_cols.last() == Some(&last) {
        return Ok(None);
    }
    let mut x = vec![zero(); m.cols()];
    for (row, &p) in ech.pivot_cols.iter().enumerate() {
        x[p] = ech.reduced[(row, last)].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use proptest::prelude::*;

    #[test]
    fn echelon_of_rank_one() {
        let e = canonical_echelon(&Matrix::from_ints(&[[2, 4], [1, 2]]));
        assert_eq!(e.reduced, Matrix::from_ints(&[[1, 2], [0, 0]]));
        assert_eq!(e.rank, 1);
        assert_eq!(e.pivot_cols, vec![0]);
    }

    #[test]
    fn echelon_identity_and_empty() {
        let e = canonical_echelon(&Matrix::identity(3));
        assert_eq!(e.reduced, Matrix::identity(3));
        assert_eq!((e.rank, e.pivot_cols), (3, vec![0, 1, 2]));

        let e = canonical_echelon(&Matrix::zeros(0, 0));
        assert_eq!(e.reduced.shape(), (0, 0));
        assert_eq!((e.rank, e.pivot_cols), (0, vec![]));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(
            nullspace(&Matrix::from_ints(&[[1, 2]])),
            Matrix::from_ints(&[[-2], [1]])
        );
        assert_eq!(nullspace(&Matrix::identity(2)).shape(), (2, 0));
        assert_eq!(nullspace(&Matrix::zeros(1, 0)).shape(), (0, 0));
        // zero rows: every column is free
        assert_eq!(nullspace(&Matrix::zeros(0, 3)), Matrix::identity(3));
    }

    #[test]
    fn solve_examples() {
        let m = Matrix::from_ints(&[[1, 0], [0, 0]]);
        assert_eq!(
            solve_linear(&m, &[int(3), int(0)]).unwrap(),
            Some(vec![int(3), int(0)])
        );
        assert_eq!(solve_linear(&m, &[int(0), int(1)]).unwrap(), None);
        let b = vec![int(-4), int(7), int(2)];
        assert_eq!(
            solve_linear(&Matrix::identity(3), &b).unwrap(),
            Some(b.clone())
        );
        assert!(matches!(
            solve_linear(&m, &[int(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..=6, 0usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::from_vec(r, c, v.into_iter().map(int).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn echelon_preserves_row_space(m in small_matrix()) {
            let e = canonical_echelon(&m);
            let r = e.reduced.select_rows(0..e.rank);
            prop_assert_eq!(rank(&m), e.rank);
            prop_assert_eq!(rank(&r), e.rank);
            if m.cols() > 0 {
                prop_assert_eq!(rank(&m.vstack(&r).unwrap()), e.rank);
            }
            prop_assert!(e.reduced.select_rows(e.rank..m.rows()).is_zero());
            prop_assert!(e.pivot_cols.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(canonical_echelon(&m), e);
        }

        #[test]
        fn nullspace_annihilates(m in small_matrix()) {
            let n = nullspace(&m);
            prop_assert!((&m * &n).is_zero());
            prop_assert_eq!(rank(&m) + n.cols(), m.cols());
            prop_assert_eq!(rank(&n), n.cols());
        }

        #[test]
        fn solve_is_sound(m in small_matrix(), seed in proptest::collection::vec(-3i64..=3, 6)) {
            let b: Vec<Rational> = seed.iter().take(m.rows()).map(|&v| int(v)).collect();
            prop_assume!(b.len() == m.rows());
            match solve_linear(&m, &b).unwrap() {
                Some(x) => prop_assert_eq!(m.mul_vec(&x).unwrap(), b),
                None => {
                    let rhs = Matrix::from_columns(m.rows(), &[b]).unwrap();
                    prop_assert!(rank(&m.hstack(&rhs).unwrap()) > rank(&m));
                }
            }
        }
    }
}
