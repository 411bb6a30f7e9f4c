use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Incremental row echelon form over the rationals for sparse vectors
/// indexed by an arbitrary ordered key. Used for exact rank computations.
#[derive(Clone, Debug)]
pub struct RowEchelon<K: Ord + Clone> {
    rows: Vec<(K, BTreeMap<K, Scalar>)>,
}

impl<K: Ord + Clone> Default for RowEchelon<K> {
    fn default() -> Self {
        RowEchelon { rows: Vec::new() }
    }
}

impl<K: Ord + Clone> RowEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` after eliminating every stored pivot.
    ///
    /// Rows are applied in insertion order; a later row never contains an
    /// earlier pivot, so one pass suffices.
    pub fn reduce(&self, mut v: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
        v.retain(|_, c| !c.is_zero());
        for (pivot, row) in &self.rows {
            let Some(c) = v.get(pivot).cloned() else { continue };
            for (k, r) in row {
                let entry = v.entry(k.clone()).or_insert_with(Scalar::zero);
                *entry -= &c * r;
                if entry.is_zero() {
                    v.remove(k);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: BTreeMap<K, Scalar>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns `true` when it was independent.
    pub fn insert(&mut self, v: BTreeMap<K, Scalar>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Scalar::one() / lead;
        let row = r.into_iter().map(|(k, c)| (k, c * &inv)).collect();
        self.rows.push((pivot, row));
        true
    }
}
