//! Canonical subspaces of `Q^d`.
//!
//! A subspace is stored by the reduced column echelon form of any spanning
//! set: the basis columns are the nonzero rows of the RREF of the
//! transposed generator matrix. Two subspaces are equal as sets exactly
//! when their bases are equal entrywise, so `==` decides set equality.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::exact::{canonical_echelon, format_rational, nullspace, rank, Matrix, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Canonical span of the columns of `generators`.
    pub fn span(ambient_dim: usize, generators: &Matrix) -> Result<Self> {
        Error::check_dim(
            "generator rows vs ambient dimension",
            ambient_dim,
            generators.rows(),
        )?;
        let ech = canonical_echelon(&generators.transpose());
        let basis = ech.reduced.select_rows(0..ech.rank).transpose();
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        Self::span(ambient_dim, &Matrix::from_columns(ambient_dim, vectors)?)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Span of the standard basis vectors `e_i` for `i` in `range`.
    pub fn coordinate_block(ambient_dim: usize, range: Range<usize>) -> Result<Self> {
        check_block(ambient_dim, &range)?;
        let mut gens = Matrix::zeros(ambient_dim, range.len());
        for (k, i) in range.enumerate() {
            gens[(i, k)] = crate::exact::one();
        }
        Self::span(ambient_dim, &gens)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// `ambient_dim x dim` matrix of canonical basis columns.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.columns().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other, "subspace sum")?;
        Self::span(self.ambient_dim, &self.basis.hstack(&other.basis)?)
    }

    /// Solves `U a = V b` through the kernel of `[U | -V]` and maps the
    /// `a` part back through `U`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other, "subspace intersection")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let stacked = self.basis.hstack(&other.basis.neg())?;
        let kernel = nullspace(&stacked);
        let coeffs = kernel.select_rows(0..self.dim());
        Self::span(self.ambient_dim, &(&self.basis * &coeffs))
    }

    /// Complement with respect to the standard dot product.
    pub fn ortho_complement(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient_dim);
        }
        let n = nullspace(&self.basis.transpose());
        Self::span(self.ambient_dim, &n).expect("nullspace has ambient rows")
    }

    /// `other ⊆ self`
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other, "subspace containment")?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        Ok(rank(&self.basis.hstack(&other.basis)?) == self.dim())
    }

    pub fn contains_vector(&self, v: &[Rational]) -> Result<bool> {
        Error::check_dim("vector length", self.ambient_dim, v.len())?;
        let col = Matrix::from_columns(self.ambient_dim, &[v.to_vec()])?;
        Ok(rank(&self.basis.hstack(&col)?) == self.dim())
    }

    /// Image under the coordinate projection onto `range`.
    pub fn block_project(&self, range: Range<usize>) -> Result<Subspace> {
        check_block(self.ambient_dim, &range)?;
        let len = range.len();
        Self::span(len, &self.basis.select_rows(range))
    }

    /// `self ∩ other = {0}`
    pub fn direct_sum_check(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other, "direct sum check")?;
        Ok(rank(&self.basis.hstack(&other.basis)?) == self.dim() + other.dim())
    }

    /// Re-embeds `self` into `Q^new_ambient`, placing its coordinates at
    /// `offset..offset + ambient_dim` and zeros elsewhere.
    pub fn embed(&self, new_ambient: usize, offset: usize) -> Result<Subspace> {
        if offset + self.ambient_dim > new_ambient {
            return Err(Error::InvalidInput(format!(
                "cannot embed Q^{} at offset {} into Q^{}",
                self.ambient_dim, offset, new_ambient
            )));
        }
        let mut gens = Matrix::zeros(new_ambient, self.dim());
        for i in 0..self.ambient_dim {
            for j in 0..self.dim() {
                gens[(offset + i, j)] = self.basis[(i, j)].clone();
            }
        }
        Self::span(new_ambient, &gens)
    }

    fn same_ambient(&self, other: &Subspace, context: &'static str) -> Result<()> {
        Error::check_dim(context, self.ambient_dim, other.ambient_dim)
    }
}

fn check_block(ambient_dim: usize, range: &Range<usize>) -> Result<()> {
    if range.start > range.end || range.end > ambient_dim {
        return Err(Error::InvalidInput(format!(
            "coordinate block {}..{} outside 0..{}",
            range.start, range.end, ambient_dim
        )));
    }
    Ok(())
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(Q^{}, dim {}) {}",
            self.ambient_dim,
            self.dim(),
            self
        )
    }
}

impl fmt::Display for Subspace {
    /// `span{(1,0),(0,1)}` style; the zero subspace prints as `{0}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        let vs: Vec<String> = self
            .basis
            .columns()
            .map(|c| {
                let e: Vec<String> = c.iter().map(format_rational).collect();
                format!("({})", e.join(","))
            })
            .collect();
        write!(f, "span{{{}}}", vs.join(","))
    }
}
