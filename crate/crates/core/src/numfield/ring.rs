use std::fmt::Debug;

use num_traits::{One, Zero};

use super::scalar::{scalar_term, Scalar};
use super::sparse_poly::SparsePoly;

/// A commutative ring with unit containing the rationals, used as the
/// coefficient algebra `A` of the Smith-type presentations.
///
/// Rings are passed as small context values so that instances such as
/// [`PolyRing`] can carry their variable count.
pub trait CoeffRing: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_scalar(&self, s: &Scalar) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn scale(&self, a: &Self::Elem, s: &Scalar) -> Self::Elem {
        self.mul(a, &self.from_scalar(s))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_scalar(&super::int(n))
    }

    /// Signed rendering of `c * mono` (`mono` may be empty).
    fn format_term(&self, c: &Self::Elem, mono: &str) -> String;
}

/// The field of rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl CoeffRing for Rationals {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn from_scalar(&self, s: &Scalar) -> Scalar {
        s.clone()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn scale(&self, a: &Scalar, s: &Scalar) -> Scalar {
        a * s
    }
    fn format_term(&self, c: &Scalar, mono: &str) -> String {
        scalar_term(c, mono)
    }
}

/// Polynomials in a fixed number of central variables `z1..zN`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub nvars: usize,
}

impl PolyRing {
    pub fn new(nvars: usize) -> Self {
        PolyRing { nvars }
    }

    pub fn var(&self, i: usize) -> SparsePoly {
        SparsePoly::var(self.nvars, i)
    }

    fn names(&self) -> Vec<String> {
        (1..=self.nvars).map(|i| format!("z{i}")).collect()
    }
}

impl CoeffRing for PolyRing {
    type Elem = SparsePoly;

    fn zero(&self) -> SparsePoly {
        SparsePoly::zero(self.nvars)
    }
    fn one(&self) -> SparsePoly {
        SparsePoly::one(self.nvars)
    }
    fn from_scalar(&self, s: &Scalar) -> SparsePoly {
        SparsePoly::constant(self.nvars, s.clone())
    }
    fn add(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a + b
    }
    fn mul(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a * b
    }
    fn neg(&self, a: &SparsePoly) -> SparsePoly {
        -a
    }
    fn is_zero(&self, a: &SparsePoly) -> bool {
        a.is_zero()
    }
    fn scale(&self, a: &SparsePoly, s: &Scalar) -> SparsePoly {
        a.scale(s)
    }
    fn format_term(&self, c: &SparsePoly, mono: &str) -> String {
        if let Some(q) = c.as_constant() {
            return scalar_term(&q, mono);
        }
        let body = c.display_with(&self.names());
        match (c.len(), mono.is_empty()) {
            (_, true) => body,
            (1, false) => format!("{body}*{mono}"),
            _ => format!("({body})*{mono}"),
        }
    }
}
