use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::multi_index::MultiIndex;
use super::scalar::{join_signed, power_product, scalar_term, Scalar};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// number of variables. Zero coefficients are never stored.
///
/// The operator impls panic on a variable-count mismatch; the `checked_*`
/// methods report it instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(MultiIndex::zero(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(nvars, i), Scalar::one())
    }

    pub fn monomial(exp: MultiIndex, c: Scalar) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        SparsePoly { nvars, terms }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (MultiIndex, Scalar)>) -> Self {
        let mut p = SparsePoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length does not match variable count");
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &MultiIndex) -> Scalar {
        self.terms.get(exp).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant term, as a scalar.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.iter().next().filter(|(e, _)| e.is_zero()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::total_degree).max()
    }

    /// The common degree of every term, if there is one. `None` for zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(MultiIndex::total_degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Largest term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &Scalar)> {
        self.terms.iter().max_by(|a, b| a.0.grlex_cmp(b.0))
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCount { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = SparsePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = SparsePoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// If `self = c * other` for a scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<Scalar> {
        if other.is_zero() {
            return self.is_zero().then(Scalar::zero);
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let (e, c_other) = other.leading_term()?;
        let c = self.coeff(e) / c_other;
        (other.scale(&c) == *self).then_some(c)
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(Scalar::zero(), |acc, (e, c)| {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e.exponents()) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc + m
        })
    }

    /// Renders with the given variable names, terms in descending grlex
    /// order.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.grlex_cmp(a.0));
        join_signed(terms.into_iter().map(|(e, c)| {
            let mono =
                power_product(names.iter().map(String::as_str).zip(e.exponents().iter().map(|&k| k as i64)));
            scalar_term(c, &mono)
        }))
    }

    pub(crate) fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Self::default_names(self.nvars)))
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::int;

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let one = SparsePoly::one(1);
        let p = &(&x(1, 0) + &one) * &(&x(1, 0) - &one);
        assert_eq!(p.to_string(), "x1^2 - 1");
    }

    #[test]
    fn det2_squared_by_hand() {
        // (x11 x22 - x12 x21)^2 = x11²x22² - 2 x11x12x21x22 + x12²x21²
        let d = &(&x(4, 0) * &x(4, 3)) - &(&x(4, 1) * &x(4, 2));
        let sq = &d * &d;
        let expected = SparsePoly::from_terms(
            4,
            [
                (MultiIndex::from_vec(vec![2, 0, 0, 2]), int(1)),
                (MultiIndex::from_vec(vec![1, 1, 1, 1]), int(-2)),
                (MultiIndex::from_vec(vec![0, 2, 2, 0]), int(1)),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn additive_identity() {
        let p = &x(2, 0) + &x(2, 1).scale(&int(3));
        assert_eq!(&p + &SparsePoly::zero(2), p);
    }

    #[test]
    fn mismatch_is_an_error() {
        let err = x(1, 0).checked_add(&x(2, 0)).unwrap_err();
        assert_eq!(err, Error::VariableCount { left: 1, right: 2 });
        assert!(x(1, 0).checked_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x(2, 0) - &x(2, 0);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn ratio_detection() {
        let d = &x(2, 0) * &x(2, 1);
        assert_eq!(d.scale(&int(5)).ratio_to(&d), Some(int(5)));
        assert_eq!((&d + &x(2, 0)).ratio_to(&d), None);
        assert_eq!(SparsePoly::zero(2).ratio_to(&d), Some(int(0)));
    }

    #[test]
    fn homogeneity() {
        let d = &(&x(2, 0) * &x(2, 1)) + &(&x(2, 0) * &x(2, 0));
        assert_eq!(d.homogeneous_degree(), Some(2));
        assert_eq!((&d + &x(2, 1)).homogeneous_degree(), None);
    }
}
