//! Exact-arithmetic library for the deformed Kleinian algebras
//! `B^tau = C<x,y> * Z_m / (xy - yx - tau)` and their quiver-variety side.
//!
//! The crate is organized bottom-up:
//! - [`scalars`]: rationals, the cyclotomic field Q(zeta_m), dense univariate
//!   polynomials and rational functions, and exact dense linear algebra.
//! - [`algebra`]: PBW normal forms in `B^tau`, free crossed-product words,
//!   weight filtrations, and genericity tests for `tau`.
//! - [`quiver`]: matrix quadruples `(X, Y, i, j)` on the moment-map level set,
//!   gauge equivalence, stability, cyclic block form, dimension counts.
//! - [`dgmodel`]: the lambda functional, the cyclic degree-zero module with its
//!   reduction engine, and the two-term model axioms.
//! - [`ideals`]: Ore-localized element arithmetic, the transition elements
//!   kappa/mu, ideal constructors, graded ladders and standard bases, the
//!   transition solve, and point reconstruction from an ideal.
//! - [`ktheory`]: K_0(Z_m) class arithmetic and the class of an ideal.
//! - [`gaction`]: the automorphism group preserving `xy - yx` and its action
//!   on points and ideals.
//! - [`selfcheck`]: the full acceptance battery, shared by tests and the CLI.

pub mod algebra;
pub mod dgmodel;
pub mod gaction;
pub mod ideals;
pub mod ktheory;
pub mod quiver;
pub mod scalars;
pub mod selfcheck;

use thiserror::Error;

/// Errors shared across the crate. Variants mirror the failure modes of the
/// individual operations; report-style checks return structured reports
/// instead of erroring.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch: {0}")]
    ShapeError(String),
    #[error("mixed algebra contexts")]
    ContextError,
    #[error("bad gauge transformation: {0}")]
    GaugeError(String),
    #[error("point is not stable")]
    StabilityError,
    #[error("could not generate a point: {0}")]
    GenerationError(String),
    #[error("validation failed: {0}")]
    ValidationError(String),
    #[error("lambda bound {bound} too small (need {needed})")]
    BoundError { needed: u32, bound: u32 },
    #[error("window exhausted: {0}")]
    WindowError(String),
    #[error("element is in the wrong normal-form ordering")]
    WrongOrderingError,
    #[error("ideal is not in the classified family: {0}")]
    NotInFamilyError(String),
    #[error("class does not decompose as a dimension-one family member")]
    NotDimOneFamilyError,
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
