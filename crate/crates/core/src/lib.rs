//! Calculus of linear relations between finite-dimensional rational inner
//! product spaces.
//!
//! A linear relation is a subspace of `Q^n x Q^m`; operators are identified
//! with their graphs. Everything is computed exactly, so subspace equality,
//! containment and every solvability test below is decided rather than
//! estimated.

pub mod error;
pub mod exact;
pub mod factor;
pub mod format;
pub mod harness;
pub mod relation;
pub mod subspace;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational};
pub use factor::{FactorizationReport, Level, Side};
pub use harness::{RelationSpec, SuiteResult};
pub use relation::{LinearRelation, RelationProfile};
pub use subspace::Subspace;
