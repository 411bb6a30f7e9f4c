use std::fmt;

use num_traits::{One, Zero};

use super::ring::{CoeffRing, Rationals};
use super::scalar::{binomial, join_signed, power_product, Scalar};
use crate::error::{Error, Result};

/// Polynomial in one variable over a [`CoeffRing`]. Coefficients are
/// stored lowest degree first with trailing zeros stripped.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

/// Rational polynomials, the common case.
pub type QPoly = UniPoly<Rationals>;

impl<R: CoeffRing> UniPoly<R> {
    pub fn zero(ring: R) -> Self {
        UniPoly { ring, coeffs: Vec::new() }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    /// The variable `t` itself.
    pub fn identity(ring: R) -> Self {
        let coeffs = vec![ring.zero(), ring.one()];
        Self::from_coeffs(ring, coeffs)
    }

    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        let mut p = UniPoly { ring, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &self.ring.mul(a, b));
            }
        }
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.scale(a, s)).collect();
        Self::from_coeffs(self.ring.clone(), coeffs)
    }

    pub fn eval(&self, t: &R::Elem) -> R::Elem {
        self.coeffs.iter().rev().fold(self.ring.zero(), |acc, c| self.ring.add(&self.ring.mul(&acc, t), c))
    }

    pub fn eval_scalar(&self, t: &Scalar) -> R::Elem {
        self.eval(&self.ring.from_scalar(t))
    }

    /// `u(t + s)` with binomially expanded coefficients.
    pub fn shift(&self, s: &Scalar) -> Self {
        if s.is_zero() || self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![self.ring.zero(); n];
        // powers of s, reused across columns
        let mut spow = vec![Scalar::one(); n];
        for k in 1..n {
            spow[k] = &spow[k - 1] * s;
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                let factor = Scalar::from_integer(binomial(j as u32, i as u32)) * &spow[j - i];
                *slot = self.ring.add(slot, &self.ring.scale(c, &factor));
            }
        }
        Self::from_coeffs(self.ring.clone(), out)
    }

    /// `p(t)^k`
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.ring.clone(), self.ring.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Renders in descending powers of `var`.
    pub fn display_var(&self, var: &str) -> String {
        join_signed(self.coeffs.iter().enumerate().rev().filter(|(_, c)| !self.ring.is_zero(c)).map(
            |(i, c)| {
                let mono = power_product([(var, i as i64)]);
                self.ring.format_term(c, &mono)
            },
        ))
    }
}

impl<R: CoeffRing> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("t"))
    }
}

impl QPoly {
    pub fn from_scalars(coeffs: Vec<Scalar>) -> Self {
        Self::from_coeffs(Rationals, coeffs)
    }

    /// `(t - a)`
    pub fn linear_root(a: &Scalar) -> Self {
        Self::from_scalars(vec![-a.clone(), Scalar::one()])
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }
}

/// Unique polynomial of degree `< points.len()` through the given points,
/// assembled in Lagrange form.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> Result<QPoly> {
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| b == a) {
            return Err(Error::DuplicateAbscissa(a.to_string()));
        }
    }
    let mut acc = QPoly::zero(Rationals);
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPoly::constant(Rationals, yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul(&QPoly::linear_root(xj)).scale_scalar(&(Scalar::one() / (xi - xj)));
            }
        }
        acc = acc.add(&basis);
    }
    Ok(acc)
}
