//! Seeded generators, definitional oracles and the property suites that
//! exercise every characterization in both directions.
//!
//! Randomness comes from ChaCha8. A suite seeded with `s` gives case `i`
//! the generator `ChaCha8Rng::seed_from_u64(s)` moved to stream `i`, so
//! cases are independent of each other and of the thread that runs them.

mod brute;
mod oracle;
mod suites;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{int, Matrix, Rational};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;

pub use brute::{
    brute_force_left, brute_force_right, operator_candidates, BRUTE_FORCE_BOUND,
    BRUTE_FORCE_MAX_DIM,
};
pub use oracle::oracle_product_membership;
pub use suites::{
    run_all, run_named, run_suite, run_suite_with, Mutation, SuiteResult, BRUTE_FORCE_CASES, SUITES,
};

pub const DEFAULT_COEFF_BOUND: i64 = 3;

/// Requested dimensions of domain, multivalued part and kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TargetDims {
    pub dom: usize,
    pub mul: usize,
    pub ker: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSpec {
    pub dim_x: usize,
    pub dim_y: usize,
    /// `None` draws a consistent profile from the seed.
    pub target: Option<TargetDims>,
    pub coeff_bound: i64,
    pub seed: u64,
}

impl RelationSpec {
    pub fn new(dim_x: usize, dim_y: usize, seed: u64) -> Self {
        RelationSpec {
            dim_x,
            dim_y,
            target: None,
            coeff_bound: DEFAULT_COEFF_BOUND,
            seed,
        }
    }

    pub fn with_target(mut self, dom: usize, mul: usize, ker: usize) -> Self {
        self.target = Some(TargetDims { dom, mul, ker });
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.coeff_bound < 1 {
            return Err(Error::InvalidInput(format!(
                "coefficient bound must be at least 1, got {}",
                self.coeff_bound
            )));
        }
        if let Some(t) = self.target {
            check_target(self.dim_x, self.dim_y, t)?;
        }
        Ok(())
    }
}

/// A relation with the given profile exists iff `ker ≤ dom ≤ dim_x`,
/// `mul ≤ dim_y` and `(dom - ker) + mul ≤ dim_y`; the last bound holds
/// because `ran` contains `mul` plus an isomorphic copy of `dom / ker`.
pub fn check_target(dim_x: usize, dim_y: usize, t: TargetDims) -> Result<()> {
    let fail = |why: &str| {
        Err(Error::InvalidInput(format!(
            "inconsistent profile dom={} mul={} ker={} in Q^{dim_x} x Q^{dim_y}: {why}",
            t.dom, t.mul, t.ker
        )))
    };
    if t.dom > dim_x {
        return fail("dom exceeds dim_x");
    }
    if t.ker > t.dom {
        return fail("ker exceeds dom");
    }
    if t.mul > dim_y {
        return fail("mul exceeds dim_y");
    }
    if t.dom - t.ker + t.mul > dim_y {
        return fail("dim ran = dom - ker + mul exceeds dim_y");
    }
    Ok(())
}

pub fn consistent_targets(dim_x: usize, dim_y: usize) -> Vec<TargetDims> {
    let mut out = Vec::new();
    for dom in 0..=dim_x {
        for ker in 0..=dom {
            for mul in 0..=dim_y {
                let t = TargetDims { dom, mul, ker };
                if check_target(dim_x, dim_y, t).is_ok() {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn random_relation(spec: &RelationSpec) -> Result<LinearRelation> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let target = match spec.target {
        Some(t) => t,
        None => random_target(&mut rng, spec.dim_x, spec.dim_y),
    };
    relation_with(&mut rng, spec.dim_x, spec.dim_y, target, spec.coeff_bound)
}

pub(crate) fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub(crate) fn random_target(rng: &mut ChaCha8Rng, dim_x: usize, dim_y: usize) -> TargetDims {
    let all = consistent_targets(dim_x, dim_y);
    all[rng.random_range(0..all.len())]
}

pub(crate) fn random_vec(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> Vec<Rational> {
    (0..d)
        .map(|_| int(rng.random_range(-bound..=bound)))
        .collect()
}

pub(crate) fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols)
        .map(|_| int(rng.random_range(-bound..=bound)))
        .collect();
    Matrix::from_vec(rows, cols, data).expect("sized data")
}

const MAX_DRAWS: usize = 256;

/// Random vector outside `s`.
pub(crate) fn fresh_vector(
    rng: &mut ChaCha8Rng,
    s: &Subspace,
    bound: i64,
) -> Result<Vec<Rational>> {
    for _ in 0..MAX_DRAWS {
        let v = random_vec(rng, s.ambient_dim(), bound);
        if !s.contains_vector(&v)? {
            return Ok(v);
        }
    }
    Err(Error::InvalidInput(format!(
        "no random vector outside a {}-dimensional subspace of Q^{}",
        s.dim(),
        s.ambient_dim()
    )))
}

/// Extends `base` by random vectors until it has dimension `k`.
pub(crate) fn extend_subspace(
    rng: &mut ChaCha8Rng,
    base: &Subspace,
    k: usize,
    bound: i64,
) -> Result<Subspace> {
    let d = base.ambient_dim();
    if k > d || k < base.dim() {
        return Err(Error::InvalidInput(format!(
            "cannot extend a {}-dimensional subspace of Q^{d} to dimension {k}",
            base.dim()
        )));
    }
    let mut s = base.clone();
    while s.dim() < k {
        let v = fresh_vector(rng, &s, bound)?;
        s = s.sum(&Subspace::from_vectors(d, &[v])?)?;
    }
    Ok(s)
}

pub(crate) fn random_subspace(
    rng: &mut ChaCha8Rng,
    d: usize,
    k: usize,
    bound: i64,
) -> Result<Subspace> {
    extend_subspace(rng, &Subspace::zero(d), k, bound)
}

/// `{0} x M` plus an operator part `span{(k, 0)} + span{(d_j, w_j)}`, where
/// the `k` span the kernel and the `w_j` are independent modulo `M`.
pub(crate) fn relation_with(
    rng: &mut ChaCha8Rng,
    dim_x: usize,
    dim_y: usize,
    t: TargetDims,
    bound: i64,
) -> Result<LinearRelation> {
    check_target(dim_x, dim_y, t)?;
    let mul = random_subspace(rng, dim_y, t.mul, bound)?;
    let ker = random_subspace(rng, dim_x, t.ker, bound)?;
    let mut dom = ker.clone();
    let mut images = mul.clone();
    let mut pairs: Vec<_> = ker
        .basis_vectors()
        .into_iter()
        .map(|k| (k, vec![int(0); dim_y]))
        .collect();
    while dom.dim() < t.dom {
        let x = fresh_vector(rng, &dom, bound)?;
        let w = fresh_vector(rng, &images, bound)?;
        dom = dom.sum(&Subspace::from_vectors(dim_x, std::slice::from_ref(&x))?)?;
        images = images.sum(&Subspace::from_vectors(dim_y, std::slice::from_ref(&w))?)?;
        pairs.push((x, w));
    }
    let op = LinearRelation::from_pairs(dim_x, dim_y, &pairs)?;
    let (a, _) = LinearRelation::pure_multivalued(dim_x, &mul).cw_sum(&op)?;
    let got = TargetDims {
        dom: a.dom().dim(),
        mul: a.mul().dim(),
        ker: a.ker().dim(),
    };
    if got != t {
        return Err(Error::InvalidInput(format!(
            "generated profile {got:?} differs from requested {t:?}"
        )));
    }
    Ok(a)
}

/// Random integer combination of the canonical basis of `s`.
pub(crate) fn random_in(rng: &mut ChaCha8Rng, s: &Subspace, bound: i64) -> Vec<Rational> {
    let c = random_vec(rng, s.dim(), bound);
    s.basis().mul_vec(&c).expect("coefficient count matches")
}

pub(crate) fn random_rel(
    rng: &mut ChaCha8Rng,
    dim_x: usize,
    dim_y: usize,
    bound: i64,
) -> Result<LinearRelation> {
    let t = random_target(rng, dim_x, dim_y);
    relation_with(rng, dim_x, dim_y, t, bound)
}

pub(crate) fn random_operator(
    rng: &mut ChaCha8Rng,
    dim_x: usize,
    dim_y: usize,
    bound: i64,
) -> Result<LinearRelation> {
    let all: Vec<_> = consistent_targets(dim_x, dim_y)
        .into_iter()
        .filter(|t| t.mul == 0)
        .collect();
    let t = all[rng.random_range(0..all.len())];
    relation_with(rng, dim_x, dim_y, t, bound)
}

/// `span{(u, Hu) : u ∈ M^⊥} + {0} x M` with `H` symmetric; self-adjoint by
/// construction.
pub fn random_selfadjoint(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Result<LinearRelation> {
    let k = rng.random_range(0..=n);
    let m = random_subspace(rng, n, k, bound)?;
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = int(rng.random_range(-bound..=bound));
            h[(i, j)] = v.clone();
            h[(j, i)] = v;
        }
    }
    let pairs: Vec<_> = m
        .ortho_complement()
        .basis_vectors()
        .into_iter()
        .map(|u| {
            let hu = h.mul_vec(&u).expect("square");
            (u, hu)
        })
        .collect();
    let op = LinearRelation::from_pairs(n, n, &pairs)?;
    Ok(op.cw_sum(&LinearRelation::pure_multivalued(n, &m))?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(a: &LinearRelation) -> (usize, usize, usize) {
        (a.dom().dim(), a.mul().dim(), a.ker().dim())
    }

    #[test]
    fn invertible_target() {
        for seed in 0..20 {
            let a = random_relation(&RelationSpec::new(2, 2, seed).with_target(2, 0, 0)).unwrap();
            assert_eq!(profile(&a), (2, 0, 0));
            assert!(a.inverse().is_operator());
        }
    }

    #[test]
    fn forced_pure_multivalued() {
        let a = random_relation(&RelationSpec::new(2, 2, 9).with_target(0, 2, 0)).unwrap();
        assert_eq!(
            a,
            LinearRelation::full(2, 2)
                .restrict(&Subspace::zero(2), &Subspace::full(2))
                .unwrap()
        );
    }

    #[test]
    fn mixed_target_seed_42() {
        let a = random_relation(&RelationSpec::new(3, 3, 42).with_target(2, 1, 1)).unwrap();
        assert_eq!(profile(&a), (2, 1, 1));
    }

    #[test]
    fn inconsistent_specs_are_rejected() {
        for (dx, dy, t) in [
            (2, 2, (3, 0, 0)),
            (2, 2, (1, 0, 2)),
            (2, 2, (0, 3, 0)),
            (3, 2, (3, 1, 1)),
        ] {
            let spec = RelationSpec::new(dx, dy, 0).with_target(t.0, t.1, t.2);
            assert!(
                matches!(random_relation(&spec), Err(Error::InvalidInput(_))),
                "{spec:?}"
            );
        }
        let mut spec = RelationSpec::new(1, 1, 0);
        spec.coeff_bound = 0;
        assert!(random_relation(&spec).is_err());
    }

    #[test]
    fn same_seed_same_relation() {
        let spec = RelationSpec::new(4, 3, 77);
        assert_eq!(
            random_relation(&spec).unwrap(),
            random_relation(&spec).unwrap()
        );
    }

    #[test]
    fn selfadjoint_generator() {
        let mut rng = case_rng(5, 0);
        for _ in 0..30 {
            let n = rng.random_range(0..=4);
            assert!(random_selfadjoint(&mut rng, n, 2)
                .unwrap()
                .is_selfadjoint()
                .unwrap());
        }
    }
}
