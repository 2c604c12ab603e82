use crate::error::{Error, Result};
use crate::exact::{solve_linear, Matrix, Rational};
use crate::relation::LinearRelation;

/// Decides `(x, z) ∈ BA` straight from the definition: is there `y` with
/// `(x, y) ∈ A` and `(y, z) ∈ B`? Unknowns are the coefficients `α`, `β`
/// of the two graph bases, constrained by
///
/// ```text
/// A_x α        = x
/// A_y α - B_y β = 0
///         B_z β = z
/// ```
pub fn oracle_product_membership(
    a: &LinearRelation,
    b: &LinearRelation,
    x: &[Rational],
    z: &[Rational],
) -> Result<bool> {
    Error::check_dim("product interface", a.dim_y(), b.dim_x())?;
    Error::check_dim("probe source", a.dim_x(), x.len())?;
    Error::check_dim("probe target", b.dim_y(), z.len())?;
    let (n, m, k) = (a.dim_x(), a.dim_y(), b.dim_y());
    let ga = a.graph().basis();
    let gb = b.graph().basis();
    let (p, q) = (ga.cols(), gb.cols());
    let mut sys = Matrix::zeros(n + m + k, p + q);
    for j in 0..p {
        for i in 0..n + m {
            sys[(i, j)] = ga[(i, j)].clone();
        }
    }
    for j in 0..q {
        for i in 0..m {
            sys[(n + i, p + j)] = -gb[(i, j)].clone();
        }
        for i in 0..k {
            sys[(n + m + i, p + j)] = gb[(m + i, j)].clone();
        }
    }
    let rhs: Vec<Rational> = x
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(crate::exact::zero(), m))
        .chain(z.iter().cloned())
        .collect();
    Ok(solve_linear(&sys, &rhs)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::subspace::Subspace;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn identity_product() {
        let id = LinearRelation::identity(2);
        assert!(oracle_product_membership(&id, &id, &v(&[3, -1]), &v(&[3, -1])).unwrap());
        assert!(!oracle_product_membership(&id, &id, &v(&[3, -1]), &v(&[3, 0])).unwrap());
    }

    #[test]
    fn projection_after_identity() {
        let a = LinearRelation::identity(2);
        let b = LinearRelation::graph_of_matrix(&Matrix::from_ints(&[[1, 0], [0, 0]]));
        assert!(!oracle_product_membership(&a, &b, &v(&[0, 1]), &v(&[0, 1])).unwrap());
        assert!(oracle_product_membership(&a, &b, &v(&[0, 1]), &v(&[0, 0])).unwrap());
    }

    #[test]
    fn multivalued_chain_reaches_everything() {
        // A = Q^1 x Q^1 composed with the identity contains every pair
        let a = LinearRelation::full(1, 1);
        let b = LinearRelation::identity(1);
        for (x, z) in [(0, 0), (1, 5), (-2, 0), (0, 7)] {
            assert!(oracle_product_membership(&a, &b, &v(&[x]), &v(&[z])).unwrap());
        }
        let m = LinearRelation::pure_multivalued(1, &Subspace::full(1));
        assert!(oracle_product_membership(&m, &b, &v(&[0]), &v(&[4])).unwrap());
        assert!(!oracle_product_membership(&m, &b, &v(&[1]), &v(&[4])).unwrap());
    }

    #[test]
    fn rejects_bad_shapes() {
        let a = LinearRelation::identity(2);
        let b = LinearRelation::identity(3);
        assert!(oracle_product_membership(&a, &b, &v(&[0, 0]), &v(&[0, 0, 0])).is_err());
    }
}
