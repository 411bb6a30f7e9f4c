use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::scalar::factorial;

/// Exponent vector of a monomial `x^α`. The derived order is plain
/// lexicographic; [`MultiIndex::grlex_cmp`] gives the printing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn zero(nvars: usize) -> Self {
        MultiIndex(vec![0; nvars])
    }

    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn from_vec(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, defined only when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn componentwise_min(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `α! = ∏ αᵢ!`
    pub fn factorial(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &e| acc * factorial(e))
    }

    /// Graded lexicographic comparison: total degree first, then lex.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.cmp(&other.0))
    }

    /// All multi-indices `k` with `0 <= k <= bound` componentwise.
    pub fn box_below(bound: &Self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::with_capacity(bound.len())];
        for &b in &bound.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=b).map(move |e| {
                        let mut p = prefix.clone();
                        p.push(e);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_and_order() {
        let a = MultiIndex::from_vec(vec![2, 1]);
        let b = MultiIndex::from_vec(vec![1, 1]);
        assert_eq!(a.checked_sub(&b), Some(MultiIndex::from_vec(vec![1, 0])));
        assert_eq!(b.checked_sub(&a), None);
        assert!(b.divides(&a));
        assert_eq!(
            MultiIndex::from_vec(vec![0, 3]).grlex_cmp(&MultiIndex::from_vec(vec![2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn box_enumeration() {
        let bound = MultiIndex::from_vec(vec![1, 2]);
        assert_eq!(MultiIndex::box_below(&bound).len(), 6);
        assert_eq!(MultiIndex::box_below(&MultiIndex::zero(0)).len(), 1);
    }
}
