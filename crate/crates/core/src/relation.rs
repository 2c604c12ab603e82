//! Linear relations `A ⊆ Q^n x Q^m` and their algebra.
//!
//! The graph of a relation lives in `Q^(n+m)` with the source block first.
//! Because the graph is a canonical [`Subspace`], two relations compare
//! equal exactly when they are the same set of pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{nullspace, solve_linear, Matrix, Rational};
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearRelation {
    dim_x: usize,
    dim_y: usize,
    graph: Subspace,
}

/// Domain, range, kernel and multivalued part of a relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationProfile {
    pub dom: Subspace,
    pub ran: Subspace,
    pub ker: Subspace,
    pub mul: Subspace,
    pub is_operator: bool,
    pub is_everywhere_defined: bool,
    pub is_surjective: bool,
}

impl LinearRelation {
    pub fn new(dim_x: usize, dim_y: usize, graph: Subspace) -> Result<Self> {
        Error::check_dim("relation graph ambient", dim_x + dim_y, graph.ambient_dim())?;
        Ok(LinearRelation {
            dim_x,
            dim_y,
            graph,
        })
    }

    /// Relation spanned by the columns of `generators`, each laid out as
    /// `(x; y)`.
    pub fn from_generators(dim_x: usize, dim_y: usize, generators: &Matrix) -> Result<Self> {
        Self::new(dim_x, dim_y, Subspace::span(dim_x + dim_y, generators)?)
    }

    pub fn from_pairs(
        dim_x: usize,
        dim_y: usize,
        pairs: &[(Vec<Rational>, Vec<Rational>)],
    ) -> Result<Self> {
        let mut cols = Vec::with_capacity(pairs.len());
        for (x, y) in pairs {
            Error::check_dim("pair source length", dim_x, x.len())?;
            Error::check_dim("pair target length", dim_y, y.len())?;
            cols.push(x.iter().chain(y).cloned().collect());
        }
        Self::new(dim_x, dim_y, Subspace::from_vectors(dim_x + dim_y, &cols)?)
    }

    /// `{(x, Mx) : x ∈ Q^cols}`
    pub fn graph_of_matrix(m: &Matrix) -> Self {
        let gens = Matrix::identity(m.cols())
            .vstack(m)
            .expect("identity and matrix share column count");
        Self::from_generators(m.cols(), m.rows(), &gens).expect("generator rows match")
    }

    pub fn identity(n: usize) -> Self {
        Self::graph_of_matrix(&Matrix::identity(n))
    }

    /// `{(x, x) : x ∈ s}`
    pub fn identity_on(s: &Subspace) -> Self {
        let b = s.basis();
        let gens = b.vstack(b).expect("same width");
        Self::from_generators(s.ambient_dim(), s.ambient_dim(), &gens)
            .expect("generator rows match")
    }

    /// `{(0, 0)}`
    pub fn zero(dim_x: usize, dim_y: usize) -> Self {
        LinearRelation {
            dim_x,
            dim_y,
            graph: Subspace::zero(dim_x + dim_y),
        }
    }

    /// `Q^n x Q^m`
    pub fn full(dim_x: usize, dim_y: usize) -> Self {
        LinearRelation {
            dim_x,
            dim_y,
            graph: Subspace::full(dim_x + dim_y),
        }
    }

    /// `{0} x s`
    pub fn pure_multivalued(dim_x: usize, s: &Subspace) -> Self {
        Self::new(
            dim_x,
            s.ambient_dim(),
            s.embed(dim_x + s.ambient_dim(), dim_x).expect("fits"),
        )
        .expect("ambient matches")
    }

    /// `dom x {0}`
    pub fn pure_kernel(d: &Subspace, dim_y: usize) -> Self {
        Self::new(
            d.ambient_dim(),
            dim_y,
            d.embed(d.ambient_dim() + dim_y, 0).expect("fits"),
        )
        .expect("ambient matches")
    }

    /// `s x t`
    pub fn product(s: &Subspace, t: &Subspace) -> Self {
        let n = s.ambient_dim() + t.ambient_dim();
        let g = s
            .embed(n, 0)
            .and_then(|a| a.sum(&t.embed(n, s.ambient_dim())?))
            .expect("blocks fit");
        Self::new(s.ambient_dim(), t.ambient_dim(), g).expect("ambient matches")
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn dim_y(&self) -> usize {
        self.dim_y
    }

    pub fn graph(&self) -> &Subspace {
        &self.graph
    }

    /// Graph basis split into `(x, y)` pairs.
    pub fn basis_pairs(&self) -> Vec<(Vec<Rational>, Vec<Rational>)> {
        self.graph
            .basis_vectors()
            .into_iter()
            .map(|mut v| {
                let y = v.split_off(self.dim_x);
                (v, y)
            })
            .collect()
    }

    pub fn dom(&self) -> Subspace {
        self.graph
            .block_project(0..self.dim_x)
            .expect("x block in range")
    }

    pub fn ran(&self) -> Subspace {
        self.graph
            .block_project(self.dim_x..self.dim_x + self.dim_y)
            .expect("y block in range")
    }

    /// `{x : (x, 0) ∈ A}`
    pub fn ker(&self) -> Subspace {
        let n = self.dim_x + self.dim_y;
        let x_axis = Subspace::coordinate_block(n, 0..self.dim_x).expect("x block in range");
        self.graph
            .intersect(&x_axis)
            .and_then(|s| s.block_project(0..self.dim_x))
            .expect("same ambient")
    }

    /// `{y : (0, y) ∈ A}`
    pub fn mul(&self) -> Subspace {
        let n = self.dim_x + self.dim_y;
        let y_axis = Subspace::coordinate_block(n, self.dim_x..n).expect("y block in range");
        self.graph
            .intersect(&y_axis)
            .and_then(|s| s.block_project(self.dim_x..n))
            .expect("same ambient")
    }

    pub fn profile(&self) -> RelationProfile {
        let dom = self.dom();
        let ran = self.ran();
        let mul = self.mul();
        RelationProfile {
            is_operator: mul.is_zero(),
            is_everywhere_defined: dom.is_full(),
            is_surjective: ran.is_full(),
            ker: self.ker(),
            dom,
            ran,
            mul,
        }
    }

    pub fn is_operator(&self) -> bool {
        self.mul().is_zero()
    }

    pub fn is_square(&self) -> bool {
        self.dim_x == self.dim_y
    }

    /// `A⁻¹`: swap the two coordinate blocks.
    pub fn inverse(&self) -> LinearRelation {
        let order: Vec<usize> = (self.dim_x..self.dim_x + self.dim_y)
            .chain(0..self.dim_x)
            .collect();
        let gens = self.graph.basis().select_rows(order);
        Self::from_generators(self.dim_y, self.dim_x, &gens).expect("swapped blocks")
    }

    /// Relational product `self ∘ first = {(x, z) : ∃y, (x, y) ∈ first,
    /// (y, z) ∈ self}`.
    ///
    /// The intersection of `first x self` with the diagonal `y = y'` is
    /// computed in coefficient space: pairs of coefficient vectors whose
    /// `y` parts agree form the kernel of `[first_y | -self_y]`.
    pub fn compose(&self, first: &LinearRelation) -> Result<LinearRelation> {
        Error::check_dim("composition interface", first.dim_y, self.dim_x)?;
        let (n, m, k) = (first.dim_x, first.dim_y, self.dim_y);
        let a = first.graph.basis();
        let b = self.graph.basis();
        let (p, q) = (a.cols(), b.cols());
        let a_x = a.select_rows(0..n);
        let a_y = a.select_rows(n..n + m);
        let b_y = b.select_rows(0..m);
        let b_z = b.select_rows(m..m + k);
        let coeffs = nullspace(&a_y.hstack(&b_y.neg())?);
        let x = &a_x * &coeffs.select_rows(0..p);
        let z = &b_z * &coeffs.select_rows(p..p + q);
        Self::from_generators(n, k, &x.vstack(&z)?)
    }

    /// Componentwise sum `{(x1 + x2, y1 + y2)}` and whether the graphs
    /// meet only at the origin.
    pub fn cw_sum(&self, other: &LinearRelation) -> Result<(LinearRelation, bool)> {
        Error::check_dim("componentwise sum source", self.dim_x, other.dim_x)?;
        Error::check_dim("componentwise sum target", self.dim_y, other.dim_y)?;
        let direct = self.graph.direct_sum_check(&other.graph)?;
        let graph = self.graph.sum(&other.graph)?;
        Ok((Self::new(self.dim_x, self.dim_y, graph)?, direct))
    }

    /// Graph intersection.
    pub fn intersect(&self, other: &LinearRelation) -> Result<LinearRelation> {
        Error::check_dim("relation intersection source", self.dim_x, other.dim_x)?;
        Error::check_dim("relation intersection target", self.dim_y, other.dim_y)?;
        Self::new(self.dim_x, self.dim_y, self.graph.intersect(&other.graph)?)
    }

    /// Restriction of the graph to `dom x ran`.
    pub fn restrict(&self, dom: &Subspace, ran: &Subspace) -> Result<LinearRelation> {
        Error::check_dim("restriction source", self.dim_x, dom.ambient_dim())?;
        Error::check_dim("restriction target", self.dim_y, ran.ambient_dim())?;
        self.intersect(&Self::product(dom, ran))
    }

    /// Operator part `A ∩ (Q^n x mul(A)^⊥)`.
    pub fn reduce_operator_part(&self) -> LinearRelation {
        let complement = self.mul().ortho_complement();
        self.restrict(&Subspace::full(self.dim_x), &complement)
            .expect("dimensions agree")
    }

    /// `A* = (V A)^⊥` with `V(u, v) = (-v, u)`, i.e. all `(x, y)` with
    /// `<y, u> = <x, v>` for every `(u, v) ∈ A`.
    pub fn adjoint(&self) -> Result<LinearRelation> {
        self.require_square("adjoint")?;
        let n = self.dim_x;
        let b = self.graph.basis();
        let flipped = b.select_rows(n..2 * n).neg().vstack(&b.select_rows(0..n))?;
        let va = Subspace::span(2 * n, &flipped)?;
        Self::new(n, n, va.ortho_complement())
    }

    pub fn is_selfadjoint(&self) -> Result<bool> {
        Ok(*self == self.adjoint()?)
    }

    /// `J_A = {((x, y), x) : (x, y) ∈ A}` as a relation from `Q^(n+m)` to
    /// `Q^n`.
    pub fn graph_projection(&self) -> LinearRelation {
        let b = self.graph.basis();
        let gens = b.vstack(&b.select_rows(0..self.dim_x)).expect("same width");
        let n = self.dim_x + self.dim_y;
        Self::from_generators(n, self.dim_x, &gens).expect("generator rows match")
    }

    /// The section `x ↦ (x, y)` with `y ∈ mul(A)^⊥`, as a relation from
    /// `Q^n` to `Q^(n+m)`. Single valued because the operator part is.
    pub fn graph_section(&self) -> LinearRelation {
        let reduced = self.reduce_operator_part();
        let b = reduced.graph.basis();
        let gens = b.select_rows(0..self.dim_x).vstack(b).expect("same width");
        let n = self.dim_x + self.dim_y;
        Self::from_generators(self.dim_x, n, &gens).expect("generator rows match")
    }

    /// Definitional membership test `(x; y) ∈ graph`, by solving against
    /// the basis.
    pub fn membership(&self, x: &[Rational], y: &[Rational]) -> Result<bool> {
        Error::check_dim("membership source", self.dim_x, x.len())?;
        Error::check_dim("membership target", self.dim_y, y.len())?;
        let v: Vec<Rational> = x.iter().chain(y).cloned().collect();
        Ok(solve_linear(self.graph.basis(), &v)?.is_some())
    }

    /// Places `self` inside `Q^big_x x Q^big_y` with its blocks at the
    /// given offsets. Lets the four-space componentwise sum be formed as
    /// an ordinary sum of embedded relations.
    pub fn embed(
        &self,
        big_x: usize,
        x_offset: usize,
        big_y: usize,
        y_offset: usize,
    ) -> Result<LinearRelation> {
        if x_offset + self.dim_x > big_x || y_offset + self.dim_y > big_y {
            return Err(Error::InvalidInput("embedding blocks do not fit".into()));
        }
        let b = self.graph.basis();
        let mut gens = Matrix::zeros(big_x + big_y, b.cols());
        for j in 0..b.cols() {
            for i in 0..self.dim_x {
                gens[(x_offset + i, j)] = b[(i, j)].clone();
            }
            for i in 0..self.dim_y {
                gens[(big_x + y_offset + i, j)] = b[(self.dim_x + i, j)].clone();
            }
        }
        Self::from_generators(big_x, big_y, &gens)
    }

    /// For an operator: its domain and the matrix whose column `j` is the
    /// image of the `j`-th canonical domain basis vector.
    pub fn operator_values(&self) -> Option<(Subspace, Matrix)> {
        if !self.is_operator() {
            return None;
        }
        let dom = self.dom();
        let mut cols = Vec::with_capacity(dom.dim());
        let b = self.graph.basis();
        let b_x = b.select_rows(0..self.dim_x);
        let b_y = b.select_rows(self.dim_x..self.dim_x + self.dim_y);
        for d in dom.basis_vectors() {
            let coeff = solve_linear(&b_x, &d).ok()??;
            cols.push(b_y.mul_vec(&coeff).ok()?);
        }
        Some((dom, Matrix::from_columns(self.dim_y, &cols).ok()?))
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{what} needs a relation on a single space, got Q^{} x Q^{}",
                self.dim_x, self.dim_y
            )))
        }
    }
}

impl fmt::Debug for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearRelation(Q^{} -> Q^{}) {}",
            self.dim_x, self.dim_y, self.graph
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn sp(d: usize, vs: &[&[i64]]) -> Subspace {
        let vs: Vec<Vec<Rational>> = vs.iter().map(|x| v(x)).collect();
        Subspace::from_vectors(d, &vs).unwrap()
    }

    fn mat(rows: &[&[i64]]) -> LinearRelation {
        LinearRelation::graph_of_matrix(&Matrix::from_ints(rows))
    }

    #[test]
    fn graph_of_matrix_examples() {
        let id = LinearRelation::identity(2);
        assert_eq!(id.graph().dim(), 2);
        assert!(id.mul().is_zero() && id.ker().is_zero());

        let p = mat(&[&[1, 0], &[0, 0]]).profile();
        assert!(p.dom.is_full());
        assert_eq!(p.ran, sp(2, &[&[1, 0]]));
        assert_eq!(p.ker, sp(2, &[&[0, 1]]));
        assert!(p.mul.is_zero() && p.is_operator && p.is_everywhere_defined && !p.is_surjective);

        let into_zero = LinearRelation::graph_of_matrix(&Matrix::zeros(0, 2));
        assert_eq!((into_zero.dim_x(), into_zero.dim_y()), (2, 0));
        assert!(into_zero.graph().is_full());
    }

    #[test]
    fn profile_examples() {
        let a = LinearRelation::pure_multivalued(2, &Subspace::full(3));
        let p = a.profile();
        assert!(p.dom.is_zero() && p.ran.is_full() && p.ker.is_zero() && p.mul.is_full());
        assert!(!p.is_operator);

        let p = LinearRelation::full(2, 3).profile();
        assert!(p.dom.is_full() && p.ran.is_full() && p.ker.is_full() && p.mul.is_full());
    }

    #[test]
    fn inverse_examples() {
        let id = LinearRelation::identity(2);
        assert_eq!(id.inverse(), id);
        let a = mat(&[&[0, 1], &[0, 0]]);
        let inv = a.inverse();
        assert_eq!(inv.dom(), sp(2, &[&[1, 0]]));
        // mul(A⁻¹) = ker(A), and A kills e1
        assert_eq!(inv.mul(), sp(2, &[&[1, 0]]));
        assert!(inv.ran().is_full());
        assert_eq!(inv.inverse(), a);
    }

    #[test]
    fn compose_examples() {
        let b = mat(&[&[0, 1], &[1, 0]]);
        let a = mat(&[&[1, 0], &[0, 0]]);
        assert_eq!(b.compose(&a).unwrap(), mat(&[&[0, 0], &[1, 0]]));
        assert_eq!(LinearRelation::identity(2).compose(&a).unwrap(), a);

        let zero_op = mat(&[&[0, 0], &[0, 0]]);
        let vertical = LinearRelation::pure_multivalued(2, &Subspace::full(2));
        assert_eq!(
            vertical.compose(&zero_op).unwrap(),
            LinearRelation::full(2, 2)
        );

        assert!(matches!(
            LinearRelation::identity(3).compose(&a),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn cw_sum_examples() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let (s, direct) = a.cw_sum(&LinearRelation::zero(2, 2)).unwrap();
        assert_eq!(s, a);
        assert!(direct);

        let b =
            LinearRelation::from_pairs(2, 2, &[(v(&[0, 0]), v(&[1, 0])), (v(&[1, 0]), v(&[0, 1]))])
                .unwrap();
        let (s, direct) = LinearRelation::pure_multivalued(2, &b.mul())
            .cw_sum(&b.reduce_operator_part())
            .unwrap();
        assert_eq!(s, b);
        assert!(direct);

        let (s, direct) = mat(&[&[1]]).cw_sum(&mat(&[&[2]])).unwrap();
        assert_eq!(s, LinearRelation::full(1, 1));
        assert!(direct);

        assert!(a.cw_sum(&LinearRelation::zero(2, 3)).is_err());
    }

    #[test]
    fn operator_part_examples() {
        let a = mat(&[&[1, 2], &[0, 1]]);
        assert_eq!(a.reduce_operator_part(), a);
        assert_eq!(
            LinearRelation::full(1, 1).reduce_operator_part(),
            mat(&[&[0]])
        );
        let vertical = LinearRelation::pure_multivalued(3, &Subspace::full(2));
        assert_eq!(vertical.reduce_operator_part(), LinearRelation::zero(3, 2));
    }

    #[test]
    fn adjoint_examples() {
        let m = Matrix::from_ints(&[[0, 1], [0, 0]]);
        let a = LinearRelation::graph_of_matrix(&m);
        assert_eq!(
            a.adjoint().unwrap(),
            LinearRelation::graph_of_matrix(&m.transpose())
        );

        let vertical = LinearRelation::pure_multivalued(2, &Subspace::full(2));
        assert_eq!(vertical.adjoint().unwrap(), vertical);

        assert!(LinearRelation::zero(2, 3).adjoint().is_err());
    }

    #[test]
    fn selfadjoint_examples() {
        assert!(mat(&[&[1, 2], &[2, 0]]).is_selfadjoint().unwrap());
        assert!(!mat(&[&[0, 1], &[0, 0]]).is_selfadjoint().unwrap());
        let z = LinearRelation::zero(1, 1);
        assert!(!z.is_selfadjoint().unwrap());
        assert_eq!(z.adjoint().unwrap(), LinearRelation::full(1, 1));
        assert!(LinearRelation::identity(0).is_selfadjoint().unwrap());
    }

    #[test]
    fn graph_projection_examples() {
        let j = LinearRelation::identity(1).graph_projection();
        assert_eq!((j.dim_x(), j.dim_y()), (2, 1));
        assert!(j.membership(&v(&[3, 3]), &v(&[3])).unwrap());
        assert!(j.is_operator());
        assert_eq!(j.dom(), sp(2, &[&[1, 1]]));

        let vertical = LinearRelation::pure_multivalued(1, &Subspace::full(1));
        let j = vertical.graph_projection();
        assert!(j.membership(&v(&[0, 5]), &v(&[0])).unwrap());
        assert_eq!(j.ker(), sp(2, &[&[0, 1]]));
    }

    #[test]
    fn graph_section_examples() {
        let a = mat(&[&[1, 2], &[3, 4]]);
        let s = a.graph_section();
        assert!(s.membership(&v(&[1, 1]), &v(&[1, 1, 3, 7])).unwrap());
        assert!(s.is_operator());

        let s = LinearRelation::full(1, 1).graph_section();
        assert_eq!(
            s,
            LinearRelation::from_pairs(1, 2, &[(v(&[1]), v(&[1, 0]))]).unwrap()
        );
    }

    #[test]
    fn membership_examples() {
        let id = LinearRelation::identity(2);
        assert!(id.membership(&v(&[1, 2]), &v(&[1, 2])).unwrap());
        assert!(!id.membership(&v(&[1, 0]), &v(&[0, 1])).unwrap());
        assert!(mat(&[&[1, 0], &[0, 0]])
            .membership(&v(&[2, 5]), &v(&[2, 0]))
            .unwrap());
        assert!(id.membership(&v(&[1]), &v(&[1, 2])).is_err());
    }

    #[test]
    fn operator_values_reads_matrix() {
        let m = Matrix::from_ints(&[[1, 2], [3, 4], [5, 6]]);
        let (dom, vals) = LinearRelation::graph_of_matrix(&m)
            .operator_values()
            .unwrap();
        assert!(dom.is_full());
        assert_eq!(vals, m);
        assert!(LinearRelation::full(1, 1).operator_values().is_none());
    }

    #[test]
    fn four_space_sum_by_embedding() {
        // A1 ⊆ Q^1 x Q^1 and A2 ⊆ Q^2 x Q^1 summed inside Q^2 x Q^1
        let a1 = mat(&[&[2]]).embed(2, 0, 1, 0).unwrap();
        let a2 = mat(&[&[1, 1]]);
        let (s, direct) = a1.cw_sum(&a2).unwrap();
        assert!(direct);
        assert_eq!(s.graph().dim(), 3);
    }

    pub(crate) fn relation(max_dim: usize) -> impl Strategy<Value = LinearRelation> {
        (0..=max_dim, 0..=max_dim, 0usize..=7).prop_flat_map(|(n, m, k)| {
            proptest::collection::vec(-3i64..=3, (n + m) * k).prop_map(move |e| {
                let g = Matrix::from_vec(n + m, k, e.into_iter().map(int).collect()).unwrap();
                LinearRelation::from_generators(n, m, &g).unwrap()
            })
        })
    }

    fn square(max_dim: usize) -> impl Strategy<Value = LinearRelation> {
        (0..=max_dim, 0usize..=7).prop_flat_map(|(n, k)| {
            proptest::collection::vec(-3i64..=3, 2 * n * k).prop_map(move |e| {
                let g = Matrix::from_vec(2 * n, k, e.into_iter().map(int).collect()).unwrap();
                LinearRelation::from_generators(n, n, &g).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_identities(a in relation(4)) {
            let p = a.profile();
            let q = a.inverse().profile();
            prop_assert_eq!(&q.dom, &p.ran);
            prop_assert_eq!(&q.ran, &p.dom);
            prop_assert_eq!(&q.ker, &p.mul);
            prop_assert_eq!(&q.mul, &p.ker);
            prop_assert_eq!(a.inverse().inverse(), a.clone());
            prop_assert!(p.dom.contains(&p.ker).unwrap());
            prop_assert!(p.ran.contains(&p.mul).unwrap());
        }

        #[test]
        fn decomposition(a in relation(4)) {
            let op = a.reduce_operator_part();
            prop_assert!(op.is_operator());
            prop_assert_eq!(op.dom(), a.dom());
            let (s, direct) = LinearRelation::pure_multivalued(a.dim_x(), &a.mul()).cw_sum(&op).unwrap();
            prop_assert_eq!(s, a);
            prop_assert!(direct);
        }

        #[test]
        fn adjoint_identities(a in square(4)) {
            let s = a.adjoint().unwrap();
            prop_assert_eq!(s.mul(), a.dom().ortho_complement());
            prop_assert_eq!(s.ker(), a.ran().ortho_complement());
            prop_assert_eq!(s.adjoint().unwrap(), a);
        }

        #[test]
        fn j_identities(a in relation(3)) {
            let j = a.graph_projection();
            let jt = a.graph_section();
            prop_assert!(j.is_operator() && jt.is_operator());
            prop_assert_eq!(j.ran(), a.dom());
            prop_assert_eq!(&j.dom(), a.graph());
            prop_assert_eq!(j.ker(), LinearRelation::pure_multivalued(a.dim_x(), &a.mul()).graph().clone());
            prop_assert_eq!(j.compose(&jt).unwrap(), LinearRelation::identity_on(&a.dom()));
        }
    }
}
