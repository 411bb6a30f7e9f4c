//! Exact arithmetic: rationals, multi-indices, sparse multivariate
//! polynomials, univariate polynomials over a coefficient ring,
//! interpolation and row reduction.

mod linalg;
mod multi_index;
mod ring;
mod scalar;
mod sparse_poly;
mod unipoly;

pub use linalg::RowEchelon;
pub use multi_index::MultiIndex;
pub use ring::{CoeffRing, PolyRing, Rationals};
pub use scalar::{binomial, factorial, falling_factorial, format_scalar, int, parse_scalar, Scalar};
pub(crate) use scalar::{join_signed, power_product, scalar_term};
pub use sparse_poly::SparsePoly;
pub use unipoly::{interpolate, QPoly, UniPoly};
