//! Exact arithmetic foundation: the cyclotomic field Q(zeta_m), dense
//! univariate polynomials and rational functions over it, and exact dense
//! linear algebra.

pub mod cyc;
pub mod matrix;
pub mod poly;
pub mod ratfunc;

pub use cyc::{CycScalar, Rat};
pub use matrix::ExactMatrix;
pub use poly::Poly;
pub use ratfunc::{RatFunc, Var};
