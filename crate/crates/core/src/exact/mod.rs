//! Exact scalars, dense matrices and the elimination primitives the rest of
//! the crate is built on.

mod echelon;
mod matrix;
mod rational;

pub use echelon::{canonical_echelon, nullspace, rank, solve_linear, Echelon};
pub use matrix::Matrix;
pub use rational::{dot, format_rational, frac, int, one, parse_rational, zero, Rational};
