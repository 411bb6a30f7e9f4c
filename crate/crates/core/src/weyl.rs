//! The Weyl algebra of differential operators with polynomial coefficients,
//! stored in normal order `Σ c x^α ∂^β`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numfield::{
    binomial, falling_factorial, join_signed, scalar_term, MultiIndex, RowEchelon, Scalar, SparsePoly,
};
use crate::parse::ExprAlgebra;

/// `Some(m)` when `[E, D] = m D`; `None` when `D` mixes grades or is zero.
pub type GradedDegree = Option<i64>;

type Key = (MultiIndex, MultiIndex);

/// A differential operator `Σ c_{αβ} x^α ∂^β` in normal order (all
/// multiplications left of all derivatives). Zero coefficients are never
/// stored, so equality is map equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylOp {
    nvars: usize,
    terms: BTreeMap<Key, Scalar>,
}

impl WeylOp {
    pub fn zero(nvars: usize) -> Self {
        WeylOp { nvars, terms: BTreeMap::new() }
    }

    pub fn scalar(nvars: usize, c: Scalar) -> Self {
        let mut op = Self::zero(nvars);
        op.add_term(MultiIndex::zero(nvars), MultiIndex::zero(nvars), c);
        op
    }

    pub fn one(nvars: usize) -> Self {
        Self::scalar(nvars, Scalar::one())
    }

    /// Multiplication by the coordinate `x_i`.
    pub fn x(nvars: usize, i: usize) -> Self {
        let mut op = Self::zero(nvars);
        op.add_term(MultiIndex::unit(nvars, i), MultiIndex::zero(nvars), Scalar::one());
        op
    }

    /// The partial derivative `∂_i`.
    pub fn d(nvars: usize, i: usize) -> Self {
        let mut op = Self::zero(nvars);
        op.add_term(MultiIndex::zero(nvars), MultiIndex::unit(nvars, i), Scalar::one());
        op
    }

    /// Multiplication by `p`.
    pub fn from_poly(p: &SparsePoly) -> Self {
        let n = p.nvars();
        let mut op = Self::zero(n);
        for (e, c) in p.terms() {
            op.add_term(e.clone(), MultiIndex::zero(n), c.clone());
        }
        op
    }

    /// The constant-coefficient operator `p(∂)`.
    pub fn from_poly_in_d(p: &SparsePoly) -> Self {
        let n = p.nvars();
        let mut op = Self::zero(n);
        for (e, c) in p.terms() {
            op.add_term(MultiIndex::zero(n), e.clone(), c.clone());
        }
        op
    }

    /// `E = Σ x_i ∂_i`.
    pub fn euler(nvars: usize) -> Self {
        let mut op = Self::zero(nvars);
        for i in 0..nvars {
            op.add_term(MultiIndex::unit(nvars, i), MultiIndex::unit(nvars, i), Scalar::one());
        }
        op
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Key, Scalar)>) -> Self {
        let mut op = Self::zero(nvars);
        for ((a, b), c) in terms {
            assert!(a.len() == nvars && b.len() == nvars, "multi-index length mismatch");
            op.add_term(a, b, c);
        }
        op
    }

    fn add_term(&mut self, a: MultiIndex, b: MultiIndex, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    /// Highest total derivative order; zero for the zero operator.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|(_, b)| b.total_degree()).max().unwrap_or(0)
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
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("variable count mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        WeylOp { nvars: self.nvars, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Normal-ordered product, using
    /// `∂^β x^γ = Σ_{k ≤ min(β,γ)} ∏ C(βᵢ,kᵢ) γᵢ!/(γᵢ−kᵢ)! x^{γ−k} ∂^{β−k}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let c = c1 * c2;
                if b1.is_zero() || a2.is_zero() {
                    out.add_term(a1.add(a2), b1.add(b2), c);
                    continue;
                }
                for k in MultiIndex::box_below(&b1.componentwise_min(a2)) {
                    let mut factor = num_bigint::BigInt::one();
                    for i in 0..self.nvars {
                        let ki = k.get(i);
                        if ki > 0 {
                            factor *= binomial(b1.get(i), ki) * falling_factorial(a2.get(i), ki);
                        }
                    }
                    let x = a1.add(&a2.checked_sub(&k).expect("k <= a2"));
                    let d = b1.checked_sub(&k).expect("k <= b1").add(b2);
                    out.add_term(x, d, &c * Scalar::from_integer(factor));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("variable count mismatch")
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// `[self, other] = self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Action on a polynomial:
    /// `x^α ∂^β (x^γ) = ∏ γᵢ!/(γᵢ−βᵢ)! x^{α+γ−β}` when `β ≤ γ`, else 0.
    pub fn checked_apply(&self, p: &SparsePoly) -> Result<SparsePoly> {
        if self.nvars != p.nvars() {
            return Err(Error::VariableCount { left: self.nvars, right: p.nvars() });
        }
        let mut out = SparsePoly::zero(self.nvars);
        for ((a, b), c) in &self.terms {
            for (g, pc) in p.terms() {
                let Some(rest) = g.checked_sub(b) else { continue };
                let mut factor = num_bigint::BigInt::one();
                for i in 0..self.nvars {
                    factor *= falling_factorial(g.get(i), b.get(i));
                }
                out.add_term(a.add(&rest), c * pc * Scalar::from_integer(factor));
            }
        }
        Ok(out)
    }

    pub fn apply(&self, p: &SparsePoly) -> SparsePoly {
        self.checked_apply(p).expect("variable count mismatch")
    }

    /// Splits into homogeneous pieces for the Euler grading; the grade of
    /// `x^α ∂^β` is `|α| − |β|`.
    pub fn graded_pieces(&self) -> BTreeMap<i64, WeylOp> {
        let mut out: BTreeMap<i64, WeylOp> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let grade = a.total_degree() as i64 - b.total_degree() as i64;
            out.entry(grade).or_insert_with(|| Self::zero(self.nvars)).add_term(
                a.clone(),
                b.clone(),
                c.clone(),
            );
        }
        out
    }

    /// The `m` with `[euler, self] = m·self`, if there is one.
    pub fn graded_degree(&self, euler: &WeylOp) -> GradedDegree {
        let ((a, b), c) = self.terms.iter().next()?;
        let bracket = euler.commutator(self);
        let ratio = bracket.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(Scalar::zero) / c;
        if !ratio.is_integer() || bracket != self.scale(&ratio) {
            return None;
        }
        i64::try_from(ratio.to_integer()).ok()
    }

    /// Renders with coordinate names; derivatives print as `d<name>`.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(k1, _), (k2, _)| {
            let deg = |(a, b): &Key| a.total_degree() + b.total_degree();
            deg(k2).cmp(&deg(k1)).then_with(|| k2.cmp(k1))
        });
        join_signed(terms.into_iter().map(|((a, b), c)| {
            let mut factors = Vec::new();
            for (i, n) in names.iter().enumerate() {
                match a.get(i) {
                    0 => {}
                    1 => factors.push(n.clone()),
                    e => factors.push(format!("{n}^{e}")),
                }
            }
            for (i, n) in names.iter().enumerate() {
                match b.get(i) {
                    0 => {}
                    1 => factors.push(format!("d{n}")),
                    e => factors.push(format!("d{n}^{e}")),
                }
            }
            scalar_term(c, &factors.join("*"))
        }))
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&SparsePoly::default_names(self.nvars)))
    }
}

impl fmt::Debug for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylOp({self})")
    }
}

/// Evaluates operator expressions: coordinate names are multiplication
/// operators and `d<name>` is the matching derivative.
pub struct WeylAlgebra<'a> {
    pub names: &'a [String],
}

impl ExprAlgebra for WeylAlgebra<'_> {
    type Value = WeylOp;

    fn constant(&self, q: &Scalar) -> WeylOp {
        WeylOp::scalar(self.names.len(), q.clone())
    }
    fn generator(&self, name: &str) -> Option<WeylOp> {
        let n = self.names.len();
        if let Some(i) = self.names.iter().position(|v| v == name) {
            return Some(WeylOp::x(n, i));
        }
        let var = name.strip_prefix('d')?;
        self.names.iter().position(|v| v == var).map(|i| WeylOp::d(n, i))
    }
    fn add(&self, a: &WeylOp, b: &WeylOp) -> WeylOp {
        a.add(b)
    }
    fn neg(&self, a: &WeylOp) -> WeylOp {
        a.neg()
    }
    fn mul(&self, a: &WeylOp, b: &WeylOp) -> WeylOp {
        a.mul(b)
    }
}

pub fn parse_op(text: &str, names: &[String]) -> Result<WeylOp> {
    crate::parse::parse_expr(text)?.eval(&WeylAlgebra { names })
}

fn coefficient_vector(op: &WeylOp) -> BTreeMap<Key, Scalar> {
    op.terms.clone()
}

/// Dimensions of the spans `L_1 ⊆ L_2 ⊆ … ⊆ L_depth`, where `L_i` is spanned
/// by the generators and all left-normed brackets `[g₁,[g₂,…[g_i,g]…]]` of
/// nesting depth at most `i`. Ranks are exact.
pub fn lie_closure_dims(generators: &[WeylOp], depth: usize) -> Vec<usize> {
    let mut echelon = RowEchelon::new();
    let mut frontier = Vec::new();
    for g in generators {
        if echelon.insert(coefficient_vector(g)) {
            frontier.push(g.clone());
        }
    }
    let mut dims = Vec::with_capacity(depth);
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in generators {
            for f in &frontier {
                let b = g.commutator(f);
                if echelon.insert(coefficient_vector(&b)) {
                    next.push(b);
                }
            }
        }
        dims.push(echelon.rank());
        frontier = next;
    }
    dims
}

/// Whether the span of `elems` is closed under commutators.
pub fn span_closed_under_bracket(elems: &[WeylOp]) -> bool {
    let mut echelon = RowEchelon::new();
    for e in elems {
        echelon.insert(coefficient_vector(e));
    }
    elems.iter().all(|a| elems.iter().all(|b| echelon.contains(coefficient_vector(&a.commutator(b)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::int;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn op(text: &str, vars: &[&str]) -> WeylOp {
        parse_op(text, &names(vars)).unwrap()
    }

    #[test]
    fn canonical_commutation() {
        let d = WeylOp::d(1, 0);
        let x = WeylOp::x(1, 0);
        assert_eq!(d.mul(&x), op("x*dx + 1", &["x"]));
        assert_eq!(x.mul(&d).display_with(&names(&["x"])), "x*dx");
    }

    #[test]
    fn second_order_exchange() {
        // ∂²x² = x²∂² + 4x∂ + 2, checked below against the action on x^k
        let lhs = op("dx^2*x^2", &["x"]);
        let rhs = op("x^2*dx^2 + 4*x*dx + 2", &["x"]);
        assert_eq!(lhs, rhs);
        for k in 0..4 {
            let p = SparsePoly::var(1, 0).pow(k);
            let via_parts = WeylOp::d(1, 0).pow(2).apply(&WeylOp::x(1, 0).pow(2).apply(&p));
            assert_eq!(rhs.apply(&p), via_parts);
        }
    }

    #[test]
    fn apply_examples() {
        let n = names(&["x", "y"]);
        let cube = SparsePoly::var(1, 0).pow(3);
        assert_eq!(WeylOp::d(1, 0).apply(&cube), SparsePoly::var(1, 0).pow(2).scale(&int(3)));
        let mono = crate::parse::parse_poly("x^3*y^2", &n).unwrap();
        assert_eq!(WeylOp::euler(2).apply(&mono), mono.scale(&int(5)));
        let xd = op("x*dx", &["x"]);
        assert!(xd.apply(&SparsePoly::constant(1, int(5))).is_zero());
    }

    #[test]
    fn commutator_examples() {
        let xd = op("x*dx", &["x"]);
        assert_eq!(xd.commutator(&WeylOp::x(1, 0)), WeylOp::x(1, 0));
        let d = WeylOp::d(1, 0);
        assert!(d.commutator(&d).is_zero());
    }

    #[test]
    fn graded_degree_examples() {
        let v = ["x11", "x12", "x21", "x22"];
        let x = op("x11*x22 - x12*x21", &v);
        let y = op("1/2*dx11*dx22 - 1/2*dx12*dx21", &v);
        let e = WeylOp::euler(4);
        assert_eq!(e.commutator(&x), x.scale(&int(2)));
        assert_eq!(x.graded_degree(&e), Some(2));
        assert_eq!(y.graded_degree(&e), Some(-2));
        assert_eq!(op("x + dx", &["x"]).graded_degree(&WeylOp::euler(1)), None);
        assert_eq!(WeylOp::zero(1).graded_degree(&WeylOp::euler(1)), None);
    }

    #[test]
    fn variable_mismatch() {
        assert!(WeylOp::x(1, 0).checked_mul(&WeylOp::x(2, 0)).is_err());
        assert!(WeylOp::x(1, 0).checked_apply(&SparsePoly::one(2)).is_err());
    }

    #[test]
    fn rank_one_closure() {
        let dims = lie_closure_dims(&[WeylOp::x(1, 0), WeylOp::d(1, 0)], 3);
        assert_eq!(dims, vec![3, 3, 3]);
    }

    #[test]
    fn quadratic_closure_is_sl2() {
        let x = op("x^2 + y^2", &["x", "y"]);
        let y = op("1/4*dx^2 + 1/4*dy^2", &["x", "y"]);
        assert_eq!(lie_closure_dims(&[x.clone(), y.clone()], 3), vec![3, 3, 3]);
        let h = y.commutator(&x);
        assert!(span_closed_under_bracket(&[x.clone(), y.clone(), h]));
        assert!(!span_closed_under_bracket(&[x, y]));
    }
}
