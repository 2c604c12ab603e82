//! Solvability of `A = BX` and `A = XB` for linear relations.
//!
//! Each solver evaluates a named set of subspace conditions, builds a
//! candidate witness, and checks the defining equation exactly. Reports
//! never claim the witness is unique; [`verify`] is the contract.
//!
//! Shapes follow the usual conventions:
//! * right problems `A = BT`: `A ⊆ X x Z`, `B ⊆ Y x Z`, `T ⊆ X x Y`;
//! * left problems `A = TB`: `A ⊆ X x Y`, `B ⊆ X x Z`, `T ⊆ Z x Y`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;

pub const RAN_SUBSET: &str = "ran_subset";
pub const MUL_SUBSET: &str = "mul_subset";
pub const MUL_EQUAL: &str = "mul_equal";
pub const DOM_SUBSET: &str = "dom_subset";
pub const DOM_EQUAL: &str = "dom_equal";
pub const KER_SUBSET: &str = "ker_subset";
pub const MUL_DIM_LE: &str = "mul_dim_le";
pub const DOM_PERP_DIM_LE: &str = "dom_perp_dim_le";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `A = B T`
    Right,
    /// `A = T B`
    Left,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Any relation `T`.
    Relation,
    /// Single-valued `T`.
    Operator,
    /// Single-valued `T` solving the adjoint equation.
    Adjoint,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::Relation => "relation",
            Level::Operator => "operator",
            Level::Adjoint => "adjoint",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => Err(Error::InvalidInput(format!(
                "unknown side {s:?} (expected left|right)"
            ))),
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relation" => Ok(Level::Relation),
            "operator" => Ok(Level::Operator),
            "adjoint" => Ok(Level::Adjoint),
            _ => Err(Error::InvalidInput(format!(
                "unknown level {s:?} (expected relation|operator|adjoint)"
            ))),
        }
    }
}

/// One named solvability condition and the subspace data it was decided on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub statement: String,
    pub held: bool,
    pub evidence: String,
}

/// An auxiliary fact established while building or checking a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub value: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub side: Side,
    pub level: Level,
    pub conditions: Vec<Condition>,
    pub solvable: bool,
    pub witness: Option<LinearRelation>,
    /// Exact check of the defining equation on the constructed candidate.
    pub verified: bool,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl FactorizationReport {
    fn new(side: Side, level: Level, conditions: Vec<Condition>) -> Self {
        let solvable = conditions.iter().all(|c| c.held);
        FactorizationReport {
            side,
            level,
            conditions,
            solvable,
            witness: None,
            verified: false,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn condition(&self, name: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn held(&self, name: &str) -> Option<bool> {
        self.condition(name).map(|c| c.held)
    }

    pub fn failed_conditions(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| !c.held)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.value)
    }

    fn push_check(&mut self, name: &str, value: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            value,
            detail: detail.into(),
        });
    }
}

fn subset(name: &str, small: (&str, &Subspace), big: (&str, &Subspace)) -> Result<Condition> {
    let held = big.1.contains(small.1)?;
    let joint = big.1.sum(small.1)?.dim();
    Ok(Condition {
        name: name.into(),
        statement: format!("{} ⊆ {}", small.0, big.0),
        held,
        evidence: format!(
            "dim {}={} dim {}={} dim({} + {})={}; {}={} {}={}",
            small.0,
            small.1.dim(),
            big.0,
            big.1.dim(),
            small.0,
            big.0,
            joint,
            small.0,
            small.1,
            big.0,
            big.1
        ),
    })
}

fn equal(name: &str, lhs: (&str, &Subspace), rhs: (&str, &Subspace)) -> Result<Condition> {
    let meet = lhs.1.intersect(rhs.1)?.dim();
    Ok(Condition {
        name: name.into(),
        statement: format!("{} = {}", lhs.0, rhs.0),
        held: lhs.1 == rhs.1,
        evidence: format!(
            "dim {}={} dim {}={} dim({} ∩ {})={}; {}={} {}={}",
            lhs.0,
            lhs.1.dim(),
            rhs.0,
            rhs.1.dim(),
            lhs.0,
            rhs.0,
            meet,
            lhs.0,
            lhs.1,
            rhs.0,
            rhs.1
        ),
    })
}

fn dim_le(name: &str, small: (&str, &Subspace), big: (&str, &Subspace)) -> Condition {
    Condition {
        name: name.into(),
        statement: format!("dim {} ≤ dim {}", small.0, big.0),
        held: small.1.dim() <= big.1.dim(),
        evidence: format!(
            "dim {}={} dim {}={}",
            small.0,
            small.1.dim(),
            big.0,
            big.1.dim()
        ),
    }
}

fn right_shapes(a: &LinearRelation, b: &LinearRelation) -> Result<()> {
    Error::check_dim(
        "A = BX needs A and B with the same target",
        a.dim_y(),
        b.dim_y(),
    )
}

fn left_shapes(a: &LinearRelation, b: &LinearRelation) -> Result<()> {
    Error::check_dim(
        "A = XB needs A and B with the same source",
        a.dim_x(),
        b.dim_x(),
    )
}

fn adjoint_shapes(a: &LinearRelation, b: &LinearRelation) -> Result<()> {
    for (r, label) in [(a, "A"), (b, "B")] {
        if !r.is_square() {
            return Err(Error::InvalidInput(format!(
                "adjoint-level solve needs {label} on a single space, got Q^{} x Q^{}",
                r.dim_x(),
                r.dim_y()
            )));
        }
    }
    Error::check_dim(
        "adjoint-level solve needs A and B on the same space",
        a.dim_x(),
        b.dim_x(),
    )
}

/// `A = BC` with `C = B⁻¹A`, which works iff `ran(A) ⊆ ran(B)` and
/// `mul(B) ⊆ mul(A)`. The candidate is checked even when a condition
/// fails, so `verified` records the direct test of `B(B⁻¹A) = A`.
pub fn solve_right_relation(a: &LinearRelation, b: &LinearRelation) -> Result<FactorizationReport> {
    right_shapes(a, b)?;
    let (pa, pb) = (a.profile(), b.profile());
    let conditions = vec![
        subset(RAN_SUBSET, ("ran(A)", &pa.ran), ("ran(B)", &pb.ran))?,
        subset(MUL_SUBSET, ("mul(B)", &pb.mul), ("mul(A)", &pa.mul))?,
    ];
    let mut report = FactorizationReport::new(Side::Right, Level::Relation, conditions);
    let c = b.inverse().compose(a)?;
    report.verified = verify(a, b, &c, Side::Right)?;
    report
        .notes
        .push("candidate C = B⁻¹A; B C = A checked exactly regardless of the conditions".into());
    if report.solvable {
        report.witness = Some(c);
    }
    Ok(report)
}

/// `A = CB` with `C = AB⁻¹`, which works iff `dom(A) ⊆ dom(B)` and
/// `ker(B) ⊆ ker(A)`.
pub fn solve_left_relation(a: &LinearRelation, b: &LinearRelation) -> Result<FactorizationReport> {
    left_shapes(a, b)?;
    let (pa, pb) = (a.profile(), b.profile());
    let conditions = vec![
        subset(DOM_SUBSET, ("dom(A)", &pa.dom), ("dom(B)", &pb.dom))?,
        subset(KER_SUBSET, ("ker(B)", &pb.ker), ("ker(A)", &pa.ker))?,
    ];
    let mut report = FactorizationReport::new(Side::Left, Level::Relation, conditions);
    let c = a.compose(&b.inverse())?;
    report.verified = verify(a, b, &c, Side::Left)?;
    report
        .notes
        .push("candidate C = AB⁻¹; C B = A checked exactly regardless of the conditions".into());
    if report.solvable {
        report.witness = Some(c);
    }
    Ok(report)
}

/// Single-valued selection used for `A = BT`: the operator part of `A`
/// followed by the branch of `B⁻¹` with values in `ker(B)^⊥`.
pub fn right_operator_witness(a: &LinearRelation, b: &LinearRelation) -> Result<LinearRelation> {
    right_shapes(a, b)?;
    let a_red = a.reduce_operator_part();
    let binv = b.inverse();
    let b_inv0 = binv.restrict(&Subspace::full(binv.dim_x()), &b.ker().ortho_complement())?;
    b_inv0.compose(&a_red)
}

/// Operator `T` with `A = BT`, which exists iff `ran(A) ⊆ ran(B)` and
/// `mul(A) = mul(B)`.
pub fn solve_right_operator(a: &LinearRelation, b: &LinearRelation) -> Result<FactorizationReport> {
    right_shapes(a, b)?;
    let (pa, pb) = (a.profile(), b.profile());
    let conditions = vec![
        subset(RAN_SUBSET, ("ran(A)", &pa.ran), ("ran(B)", &pb.ran))?,
        equal(MUL_EQUAL, ("mul(A)", &pa.mul), ("mul(B)", &pb.mul))?,
    ];
    let mut report = FactorizationReport::new(Side::Right, Level::Operator, conditions);

    // B⁻¹A itself is an operator solution iff additionally ker(B) = {0}
    let c = b.inverse().compose(a)?;
    let c_works = c.is_operator() && verify(a, b, &c, Side::Right)?;
    let predicted = report.solvable && pb.ker.is_zero();
    report.push_check(
        "inverse_product_operator_solution",
        c_works,
        format!(
            "B⁻¹A single valued={} and B(B⁻¹A)=A; predicted by conditions and ker(B)={{0}}: {}",
            c.is_operator(),
            yes_no(predicted)
        ),
    );
    report.push_check(
        "inverse_product_prediction",
        predicted,
        format!("dim ker(B)={}", pb.ker.dim()),
    );

    if report.solvable {
        let t = right_operator_witness(a, b)?;
        report.verified = verify(a, b, &t, Side::Right)?;
        let tp = t.profile();
        report.push_check(
            "witness_single_valued",
            tp.is_operator,
            format!("dim mul(T)={}", tp.mul.dim()),
        );
        report.push_check(
            "witness_dom_equal",
            tp.dom == pa.dom,
            format!("dom(T)={} dom(A)={}", tp.dom, pa.dom),
        );
        report.push_check(
            "witness_ran_in_ker_perp",
            pb.ker.ortho_complement().contains(&tp.ran)?,
            "ran(T) ⊆ ker(B)^⊥",
        );
        report.witness = Some(t);
        report.notes.push(
            "witness T = (B⁻¹ ∩ (Z x ker(B)^⊥)) ∘ (A ∩ (X x mul(A)^⊥)); complement of mul(A) taken orthogonal".into(),
        );
    }
    Ok(report)
}

/// Pieces of the operator witness for `A = TB`: the part `T₀` between
/// `mul(B)^⊥` and `mul(A)^⊥`, and the bijection `T_mul` from the first
/// `dim mul(A)` canonical basis vectors of `mul(B)` onto the canonical
/// basis of `mul(A)`. Requires `dim mul(A) ≤ dim mul(B)`.
pub fn left_operator_pieces(
    a: &LinearRelation,
    b: &LinearRelation,
) -> Result<(LinearRelation, LinearRelation)> {
    left_shapes(a, b)?;
    let (mul_a, mul_b) = (a.mul(), b.mul());
    if mul_a.dim() > mul_b.dim() {
        return Err(Error::InvalidInput(format!(
            "no surjection from mul(B) (dim {}) onto mul(A) (dim {})",
            mul_b.dim(),
            mul_a.dim()
        )));
    }
    let t0 = a
        .compose(&b.inverse())?
        .restrict(&mul_b.ortho_complement(), &mul_a.ortho_complement())?;
    let pairs: Vec<_> = mul_b
        .basis_vectors()
        .into_iter()
        .zip(mul_a.basis_vectors())
        .collect();
    let t_mul = LinearRelation::from_pairs(b.dim_y(), a.dim_y(), &pairs)?;
    Ok((t0, t_mul))
}

/// Operator `T` with `A = TB`, which exists iff `dom(A) ⊆ dom(B)`,
/// `ker(B) ⊆ ker(A)` and some subspace of `mul(B)` maps onto `mul(A)`.
/// In finite dimension the last condition is `dim mul(A) ≤ dim mul(B)`.
pub fn solve_left_operator(a: &LinearRelation, b: &LinearRelation) -> Result<FactorizationReport> {
    left_shapes(a, b)?;
    let (pa, pb) = (a.profile(), b.profile());
    let conditions = vec![
        subset(DOM_SUBSET, ("dom(A)", &pa.dom), ("dom(B)", &pb.dom))?,
        subset(KER_SUBSET, ("ker(B)", &pb.ker), ("ker(A)", &pa.ker))?,
        dim_le(MUL_DIM_LE, ("mul(A)", &pa.mul), ("mul(B)", &pb.mul)),
    ];
    let mut report = FactorizationReport::new(Side::Left, Level::Operator, conditions);
    report.notes.push(
        "mul_dim_le: a subspace D ⊆ mul(B) with a linear surjection onto mul(A) exists iff dim mul(A) ≤ dim mul(B)".into(),
    );

    // AB⁻¹ itself is an operator solution iff additionally mul(A) = {0}
    let c = a.compose(&b.inverse())?;
    let c_works = c.is_operator() && verify(a, b, &c, Side::Left)?;
    let predicted = report.held(DOM_SUBSET) == Some(true)
        && report.held(KER_SUBSET) == Some(true)
        && pa.mul.is_zero();
    report.push_check(
        "inverse_product_operator_solution",
        c_works,
        format!("AB⁻¹ single valued={} and (AB⁻¹)B=A; predicted by dom_subset, ker_subset and mul(A)={{0}}: {}", c.is_operator(), yes_no(predicted)),
    );
    report.push_check(
        "inverse_product_prediction",
        predicted,
        format!("dim mul(A)={}", pa.mul.dim()),
    );

    if report.solvable {
        let (t0, t_mul) = left_operator_pieces(a, b)?;
        let (t, direct) = t0.cw_sum(&t_mul)?;
        report.verified = verify(a, b, &t, Side::Left)?;
        report.push_check(
            "t0_single_valued",
            t0.is_operator(),
            format!("dim mul(T₀)={}", t0.mul().dim()),
        );
        report.push_check(
            "t_mul_onto_mul_a",
            t_mul.ran() == pa.mul,
            format!("ran(T_mul)={} mul(A)={}", t_mul.ran(), pa.mul),
        );
        report.push_check("sum_direct", direct, "T₀ ∩ T_mul = {(0,0)}");
        report.push_check(
            "witness_single_valued",
            t.is_operator(),
            format!("dim mul(T)={}", t.mul().dim()),
        );
        report.witness = Some(t);
        report.notes.push(
            "witness T = T₀ ⊕ T_mul with T₀ = AB⁻¹ ∩ (mul(B)^⊥ x mul(A)^⊥) and T_mul the canonical-basis bijection".into(),
        );
    }
    Ok(report)
}

const CLOSURE_NOTE: &str =
    "closures of dom, mul and ran are the subspaces themselves in finite dimension";

/// Operator `T` with `A* = B*T`: exists iff `ker(B) ⊆ ker(A)` and
/// `dom(A) = dom(B)`. The witness comes from the operator-level right
/// solver applied to the adjoints.
pub fn solve_adjoint_right(a: &LinearRelation, b: &LinearRelation) -> Result<FactorizationReport> {
    adjoint_shapes(a, b)?;
    let (pa, pb) = (a.profile(), b.profile());
    let conditions = vec![
        subset(KER_SUBSET, ("ker(B)", &pb.ker), ("ker(A)", &pa.ker))?,
        equal(DOM_EQUAL, ("dom(A)", &pa.dom), ("dom(B)", &pb.dom))?,
    ];
    let mut report = FactorizationReport::new(Side::Right, Level::Adjoint, conditions);
    report.notes.push(CLOSURE_NOTE.into());
    report.notes.push("equation A* = B* T".into());
    let (a_star, b_star) = (a.adjoint()?, b.adjoint()?);
    let inner = solve_right_operator(&a_star, &b_star)?;
    report.push_check(
        "adjoint_operator_solvable",
        inner.solvable,
        "operator-level right solve on (A*, B*); ran(A*)=ker(A)^⊥, mul(A*)=dom(A)^⊥",
    );
    if report.solvable {
        if let Some(t) = inner.witness {
            report.verified = verify(&a_star, &b_star, &t, Side::Right)?;
            report.push_check(
                "witness_single_valued",
                t.is_operator(),
                format!("dim mul(T)={}", t.mul().dim()),
            );
            report.witness = Some(t);
        }
    }
    Ok(report)
}

/// Operator `T` with `A* = TB*`: exists iff `mul(B) ⊆ mul(A)`,
/// `ran(A) ⊆ ran(B)` and `dim dom(A)^⊥ ≤ dim dom(B)^⊥`.
pub fn solve_adjoint_left(a: &LinearRelation, b: &LinearRelation) -> Result<FactorizationReport> {
    adjoint_shapes(a, b)?;
    let (pa, pb) = (a.profile(), b.profile());
    let (dom_a_perp, dom_b_perp) = (pa.dom.ortho_complement(), pb.dom.ortho_complement());
    let conditions = vec![
        subset(MUL_SUBSET, ("mul(B)", &pb.mul), ("mul(A)", &pa.mul))?,
        subset(RAN_SUBSET, ("ran(A)", &pa.ran), ("ran(B)", &pb.ran))?,
        dim_le(
            DOM_PERP_DIM_LE,
            ("dom(A)^⊥", &dom_a_perp),
            ("dom(B)^⊥", &dom_b_perp),
        ),
    ];
    let mut report = FactorizationReport::new(Side::Left, Level::Adjoint, conditions);
    report.notes.push(CLOSURE_NOTE.into());
    report.notes.push("equation A* = T B*".into());
    report.notes.push(
        "mul_subset is mul(B) ⊆ mul(A); the self-adjoint form of this criterion uses the same inclusion".into(),
    );
    report.notes.push(
        "dom_perp_dim_le: a surjection from a subspace of dom(B)^⊥ = mul(B*) onto dom(A)^⊥ = mul(A*) exists iff the dimensions compare".into(),
    );
    let (a_star, b_star) = (a.adjoint()?, b.adjoint()?);
    let inner = solve_left_operator(&a_star, &b_star)?;
    report.push_check(
        "adjoint_operator_solvable",
        inner.solvable,
        "operator-level left solve on (A*, B*); dom(A*)=mul(A)^⊥, ker(A*)=ran(A)^⊥",
    );
    if report.solvable {
        if let Some(t) = inner.witness {
            report.verified = verify(&a_star, &b_star, &t, Side::Left)?;
            report.push_check(
                "witness_single_valued",
                t.is_operator(),
                format!("dim mul(T)={}", t.mul().dim()),
            );
            report.witness = Some(t);
        }
    }
    Ok(report)
}

pub fn solve(
    side: Side,
    level: Level,
    a: &LinearRelation,
    b: &LinearRelation,
) -> Result<FactorizationReport> {
    match (side, level) {
        (Side::Right, Level::Relation) => solve_right_relation(a, b),
        (Side::Right, Level::Operator) => solve_right_operator(a, b),
        (Side::Right, Level::Adjoint) => solve_adjoint_right(a, b),
        (Side::Left, Level::Relation) => solve_left_relation(a, b),
        (Side::Left, Level::Operator) => solve_left_operator(a, b),
        (Side::Left, Level::Adjoint) => solve_adjoint_left(a, b),
    }
}

/// Exact check of `B T = A` (right) or `T B = A` (left).
pub fn verify(
    a: &LinearRelation,
    b: &LinearRelation,
    t: &LinearRelation,
    side: Side,
) -> Result<bool> {
    let product = match side {
        Side::Right => {
            Error::check_dim("witness source vs dom space of A", a.dim_x(), t.dim_x())?;
            Error::check_dim("target of A vs target of B", a.dim_y(), b.dim_y())?;
            b.compose(t)?
        }
        Side::Left => {
            Error::check_dim("witness target vs target of A", a.dim_y(), t.dim_y())?;
            Error::check_dim("source of A vs source of B", a.dim_x(), b.dim_x())?;
            t.compose(b)?
        }
    };
    Ok(product == *a)
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
