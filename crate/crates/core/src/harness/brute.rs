//! Exhaustive search over a finite family of small operators. Used only
//! to corroborate the negative direction of the operator criteria, so the
//! family need not contain every operator.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;

pub const BRUTE_FORCE_MAX_DIM: usize = 2;
pub const BRUTE_FORCE_BOUND: i64 = 2;

/// `{0}`, the full space and, in `Q^2`, the lines `span{(1, c)}` for
/// `|c| ≤ 2` and `span{(0, 1)}`.
fn domains(p: usize) -> Vec<Subspace> {
    let mut out = vec![Subspace::zero(p)];
    if p == 2 {
        for c in -BRUTE_FORCE_BOUND..=BRUTE_FORCE_BOUND {
            out.push(Subspace::from_vectors(2, &[vec![int(1), int(c)]]).expect("line"));
        }
        out.push(Subspace::from_vectors(2, &[vec![int(0), int(1)]]).expect("line"));
    }
    if p > 0 {
        out.push(Subspace::full(p));
    }
    out
}

/// All vectors of length `len` with entries in `-bound..=bound`.
fn grid(len: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-BRUTE_FORCE_BOUND..=BRUTE_FORCE_BOUND).map(move |c| {
                    let mut w = v.clone();
                    w.push(int(c));
                    w
                })
            })
            .collect();
    }
    out
}

fn build(p: usize, q: usize) -> Vec<LinearRelation> {
    let mut out = Vec::new();
    for d in domains(p) {
        let basis = d.basis_vectors();
        for values in grid(basis.len() * q) {
            let pairs: Vec<_> = basis
                .iter()
                .enumerate()
                .map(|(i, x)| (x.clone(), values[i * q..(i + 1) * q].to_vec()))
                .collect();
            out.push(LinearRelation::from_pairs(p, q, &pairs).expect("sized pairs"));
        }
    }
    out
}

/// Operators `Q^p -> Q^q` whose domain comes from the list above and
/// whose values on the canonical domain basis have entries in `{-2..2}`.
pub fn operator_candidates(p: usize, q: usize) -> Result<&'static [LinearRelation]> {
    const N: usize = BRUTE_FORCE_MAX_DIM + 1;
    static CACHE: [[OnceLock<Vec<LinearRelation>>; N]; N] =
        [const { [const { OnceLock::new() }; N] }; N];
    if p > BRUTE_FORCE_MAX_DIM || q > BRUTE_FORCE_MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "brute force limited to dimensions ≤ {BRUTE_FORCE_MAX_DIM}, got {p} -> {q}"
        )));
    }
    Ok(CACHE[p][q].get_or_init(|| build(p, q)))
}

/// First candidate `T` with `B T = A`.
pub fn brute_force_right(a: &LinearRelation, b: &LinearRelation) -> Result<Option<LinearRelation>> {
    Error::check_dim(
        "A = BT needs A and B with the same target",
        a.dim_y(),
        b.dim_y(),
    )?;
    for t in operator_candidates(a.dim_x(), b.dim_x())? {
        if b.compose(t)? == *a {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

/// First candidate `T` with `T B = A`.
pub fn brute_force_left(a: &LinearRelation, b: &LinearRelation) -> Result<Option<LinearRelation>> {
    Error::check_dim(
        "A = TB needs A and B with the same source",
        a.dim_x(),
        b.dim_x(),
    )?;
    for t in operator_candidates(b.dim_y(), a.dim_y())? {
        if t.compose(b)? == *a {
            return Ok(Some(t.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Matrix;

    #[test]
    fn candidate_counts() {
        // 1 + 6 * 5^2 + 25^2 at 2 -> 2
        assert_eq!(operator_candidates(2, 2).unwrap().len(), 776);
        assert_eq!(operator_candidates(1, 1).unwrap().len(), 6);
        assert_eq!(operator_candidates(0, 2).unwrap().len(), 1);
        assert_eq!(operator_candidates(2, 0).unwrap().len(), 8);
        assert!(operator_candidates(3, 1).is_err());
        assert!(operator_candidates(2, 2)
            .unwrap()
            .iter()
            .all(LinearRelation::is_operator));
    }

    #[test]
    fn finds_known_witness() {
        let a = LinearRelation::graph_of_matrix(&Matrix::from_ints(&[[2, 0], [0, 0]]));
        let b = LinearRelation::graph_of_matrix(&Matrix::from_ints(&[[1, 0], [0, 0]]));
        let t = brute_force_right(&a, &b).unwrap().expect("witness in grid");
        assert_eq!(b.compose(&t).unwrap(), a);
        let t = brute_force_left(&a, &LinearRelation::identity(2))
            .unwrap()
            .expect("A itself");
        assert_eq!(t, a);
    }

    #[test]
    fn no_witness_when_range_escapes() {
        let a = LinearRelation::identity(2);
        let b = LinearRelation::graph_of_matrix(&Matrix::from_ints(&[[1, 0], [0, 0]]));
        assert!(brute_force_right(&a, &b).unwrap().is_none());
        assert!(brute_force_left(&a, &b).unwrap().is_none());
    }
}
