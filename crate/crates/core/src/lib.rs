//! Exact computation with invariant differential operators on
//! multiplicity-free spaces with a one-dimensional quotient.
//!
//! The crate is layered bottom-up:
//!
//! * [`numfield`]: rationals, sparse multivariate polynomials, univariate
//!   polynomials over an abstract coefficient ring, interpolation and exact
//!   row reduction.
//! * [`weyl`]: the Weyl algebra of polynomial-coefficient differential
//!   operators in normal order, its action on polynomials, commutators and
//!   Lie-closure tracking.
//! * [`smith`]: the abstract algebras `S(A, f, n)` and `U(A, u, n)` with
//!   rewriting to normal form.
//! * [`laurent`]: the localized model `⊕ A[e] x^p`, the shift automorphism
//!   `tau`, and the radial representation on Laurent polynomials in `t`.
//! * [`pvcat`]: the catalog of spaces, b-functions, `ū` extraction, radial
//!   components and the verification suite.
//! * [`parse`] and [`report`]: expression grammar and structured reports
//!   shared with the command-line front end.

pub mod error;
pub mod laurent;
pub mod numfield;
pub mod parse;
pub mod pvcat;
pub mod report;
pub mod smith;
pub mod weyl;

pub use error::{Error, Result};
pub use laurent::{LaurentElement, RadialVector};
pub use numfield::{
    interpolate, CoeffRing, MultiIndex, PolyRing, QPoly, Rationals, RowEchelon, Scalar, SparsePoly, UniPoly,
};
pub use parse::{parse_expr, Alphabet, Expr};
pub use pvcat::{BTable, PVSpace};
pub use report::{Check, CheckStatus, Report, ReportValues};
pub use smith::{SNormalForm, SPresentation, UNormalForm, UPresentation, WordSum};
pub use weyl::WeylOp;
