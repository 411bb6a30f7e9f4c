//! The localized model `T = ⊕_{p∈Z} x^p A[e]`, in which `x` is invertible
//! and `e x = x (e + n)`. Elements are stored as `Σ x^p g_p(e)` with the
//! coefficient polynomial to the right of the power of `x`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Result;
use crate::numfield::{int, join_signed, CoeffRing, QPoly, Rationals, RowEchelon, Scalar, UniPoly};
use crate::parse::ExprAlgebra;
use crate::smith::{Letter, UNormalForm, UPresentation, WordSum};

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentElement<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<i64, UniPoly<R>>,
}

impl<R: CoeffRing> LaurentElement<R> {
    pub fn zero(ring: R) -> Self {
        LaurentElement { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::monomial(ring.clone(), 0, UniPoly::constant(ring, one))
    }

    /// `x^p · g(e)`
    pub fn monomial(ring: R, p: i64, g: UniPoly<R>) -> Self {
        let mut out = Self::zero(ring);
        out.add_piece(p, g);
        out
    }

    /// `x^p`
    pub fn x_pow(ring: R, p: i64) -> Self {
        let one = ring.one();
        Self::monomial(ring.clone(), p, UniPoly::constant(ring, one))
    }

    /// `e`
    pub fn e(ring: R) -> Self {
        Self::monomial(ring.clone(), 0, UniPoly::identity(ring))
    }

    /// `g(e)`, the degree-zero part `A[e]`.
    pub fn from_e_poly(g: UniPoly<R>) -> Self {
        Self::monomial(g.ring().clone(), 0, g)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn add_piece(&mut self, p: i64, g: UniPoly<R>) {
        let sum = match self.terms.remove(&p) {
            Some(old) => old.add(&g),
            None => g,
        };
        if !sum.is_zero() {
            self.terms.insert(p, sum);
        }
    }

    /// `(p, g_p)` pairs in increasing `p`.
    pub fn pieces(&self) -> impl Iterator<Item = (i64, &UniPoly<R>)> {
        self.terms.iter().map(|(p, g)| (*p, g))
    }

    pub fn piece(&self, p: i64) -> UniPoly<R> {
        self.terms.get(&p).cloned().unwrap_or_else(|| UniPoly::zero(self.ring.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, g) in &other.terms {
            out.add_piece(*p, g.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentElement {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(p, g)| (*p, g.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (p, g) in &self.terms {
            out.add_piece(*p, g.scale(c));
        }
        out
    }

    /// `(x^p g(e)) (x^q h(e)) = x^{p+q} g(e + q n) h(e)`.
    pub fn mul(&self, other: &Self, n: u32) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (p, g) in &self.terms {
            for (q, h) in &other.terms {
                let shifted = g.shift(&int(q * n as i64));
                out.add_piece(p + q, shifted.mul(h));
            }
        }
        out
    }

    /// `τ(D) = x D x⁻¹`, which sends `x^p g(e)` to `x^p g(e − n)`.
    pub fn tau(&self, n: u32) -> Self {
        self.shift_coefficients(-(n as i64))
    }

    /// Inverse of [`tau`](Self::tau).
    pub fn tau_inv(&self, n: u32) -> Self {
        self.shift_coefficients(n as i64)
    }

    fn shift_coefficients(&self, s: i64) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (p, g) in &self.terms {
            out.add_piece(*p, g.shift(&int(s)));
        }
        out
    }

    /// Renders as `Σ x^p*(g_p(e))`.
    pub fn display(&self) -> String {
        join_signed(self.terms.iter().rev().map(|(&p, g)| {
            let xp = match p {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{p}"),
            };
            let nonzero: Vec<_> =
                g.coeffs().iter().enumerate().filter(|(_, c)| !self.ring.is_zero(c)).collect();
            if let [(j, c)] = nonzero.as_slice() {
                let ej = match j {
                    0 => String::new(),
                    1 => "e".to_string(),
                    _ => format!("e^{j}"),
                };
                let mono = [xp, ej].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("*");
                return self.ring.format_term(c, &mono);
            }
            if p == 0 {
                g.display_var("e")
            } else {
                format!("{xp}*({})", g.display_var("e"))
            }
        }))
    }
}

impl<R: CoeffRing> fmt::Display for LaurentElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// The image of `y` under the embedding of `U(A, u, n)`: `x⁻¹ u(e)`.
pub fn y_image<R: CoeffRing>(upres: &UPresentation<R>) -> LaurentElement<R> {
    LaurentElement::monomial(upres.ring().clone(), -1, upres.u.clone())
}

/// Evaluates a word sum directly in the model, with `y ↦ x⁻¹ u(e)`.
pub fn eval_words<R: CoeffRing>(w: &WordSum<R>, upres: &UPresentation<R>) -> LaurentElement<R> {
    let ring = upres.ring().clone();
    let n = upres.n;
    let y = y_image(upres);
    let mut out = LaurentElement::zero(ring.clone());
    for (word, c) in w.terms() {
        let mut acc = LaurentElement::one(ring.clone());
        for l in word {
            let g = match l {
                Letter::X => LaurentElement::x_pow(ring.clone(), 1),
                Letter::XInv => LaurentElement::x_pow(ring.clone(), -1),
                Letter::E => LaurentElement::e(ring.clone()),
                Letter::Y => y.clone(),
            };
            acc = acc.mul(&g, n);
        }
        out = out.add(&acc.scale(c));
    }
    out
}

/// The embedding `U(A, u, n) → T`: `x ↦ x`, `e ↦ e`, `y ↦ x⁻¹ u(e)`.
pub fn embed_u<R: CoeffRing>(nf: &UNormalForm<R>, upres: &UPresentation<R>) -> LaurentElement<R> {
    let ring = upres.ring().clone();
    let n = upres.n;
    let y = y_image(upres);
    let mut out = LaurentElement::zero(ring.clone());
    for (&(k, l), c) in nf.y_terms() {
        let mut acc = LaurentElement::one(ring.clone());
        for _ in 0..l {
            acc = acc.mul(&y, n);
        }
        let ek = UniPoly::identity(ring.clone()).pow(k);
        out = out.add(&acc.mul(&LaurentElement::from_e_poly(ek), n).scale(c));
    }
    for (&(m, r), c) in nf.x_terms() {
        let er = UniPoly::identity(ring.clone()).pow(r).scale(c);
        out.add_piece(m as i64, er);
    }
    out
}

/// Expression evaluation in the model over the rationals.
pub struct LaurentAlgebra<'a> {
    pub upres: &'a UPresentation<Rationals>,
    pub alphabet: crate::parse::Alphabet,
}

impl ExprAlgebra for LaurentAlgebra<'_> {
    type Value = LaurentElement<Rationals>;

    fn constant(&self, q: &Scalar) -> Self::Value {
        LaurentElement::x_pow(Rationals, 0).scale(q)
    }
    fn generator(&self, name: &str) -> Option<Self::Value> {
        let [x, y, e] = self.alphabet.generators();
        if name == x {
            Some(LaurentElement::x_pow(Rationals, 1))
        } else if name == y {
            Some(y_image(self.upres))
        } else if name == e {
            Some(LaurentElement::e(Rationals))
        } else {
            None
        }
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.add(b)
    }
    fn neg(&self, a: &Self::Value) -> Self::Value {
        a.neg()
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.mul(b, self.upres.n)
    }
    fn inverse(&self, a: &Self::Value) -> Option<Self::Value> {
        // only monomials x^p are units
        let mut pieces = a.pieces();
        let (p, g) = pieces.next()?;
        if pieces.next().is_some() || g.degree() != Some(0) {
            return None;
        }
        let c = g.coeff(0);
        Some(LaurentElement::x_pow(Rationals, -p).scale(&(int(1) / c)))
    }
}

pub fn parse_laurent(
    text: &str,
    upres: &UPresentation<Rationals>,
    alphabet: crate::parse::Alphabet,
) -> Result<LaurentElement<Rationals>> {
    crate::parse::parse_expr(text)?.eval(&LaurentAlgebra { upres, alphabet })
}

/// Laurent polynomial `Σ c_k t^k` acted on by the radial representation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadialVector {
    coeffs: BTreeMap<i64, Scalar>,
}

impl RadialVector {
    pub fn monomial(k: i64) -> Self {
        let mut v = RadialVector::default();
        v.add_term(k, int(1));
        v
    }

    pub fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `(x^p g(e)) · t^k = g(k d₀) t^{k+p}`, extended linearly.
pub fn radial_act(elem: &LaurentElement<Rationals>, v: &RadialVector, d0: u32) -> RadialVector {
    let mut out = RadialVector::default();
    for (k, c) in v.terms() {
        let ev = int(k * d0 as i64);
        for (p, g) in elem.pieces() {
            out.add_term(k + p, c * g.eval(&ev));
        }
    }
    out
}

/// Splits `g ∈ Q[e]` as `g(0) + e·h(e)`, the decomposition of the
/// degree-zero part into its central (τ-fixed) summand and `e`-multiple.
pub fn split_center(g: &QPoly) -> (Scalar, QPoly) {
    let c0 = g.coeff(0);
    let rest = g.coeffs().iter().skip(1).cloned().collect();
    (c0, QPoly::from_scalars(rest))
}

/// Exact rank check behind the uniqueness of `U`-normal forms: the images
/// of `y^ℓ e^k` (`1 ≤ ℓ ≤ max_power`) and `x^m e^r` (`m ≤ max_power`),
/// with `e`-degrees up to `max_e_degree`, are linearly independent as
/// operators on `span{t^0, …, t^max_t}`.
///
/// Returns `(rank, number of basis monomials)`.
pub fn normal_form_basis_rank(
    upres: &UPresentation<Rationals>,
    max_e_degree: u32,
    max_power: u32,
    max_t: i64,
) -> (usize, usize) {
    let d0 = upres.n;
    let mut basis = Vec::new();
    for deg in 0..=max_e_degree {
        for l in 1..=max_power {
            let mut nf = UNormalForm::zero(Rationals);
            nf.add_y_term(deg, l, int(1));
            basis.push(nf);
        }
        for m in 0..=max_power {
            let mut nf = UNormalForm::zero(Rationals);
            nf.add_x_term(m, deg, int(1));
            basis.push(nf);
        }
    }
    let mut echelon = RowEchelon::new();
    for nf in &basis {
        let image = embed_u(nf, upres);
        let mut row = BTreeMap::new();
        for k in 0..=max_t {
            for (j, c) in radial_act(&image, &RadialVector::monomial(k), d0).terms() {
                row.insert((k, j), c.clone());
            }
        }
        echelon.insert(row);
    }
    (echelon.rank(), basis.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::Alphabet;
    use crate::smith::parse_words;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n.into(), d.into())
    }

    fn upres(u: &[Scalar], n: u32) -> UPresentation<Rationals> {
        UPresentation::new(QPoly::from_scalars(u.to_vec()), n).unwrap()
    }

    fn lt(text: &str, up: &UPresentation<Rationals>) -> LaurentElement<Rationals> {
        parse_laurent(text, up, Alphabet::Abstract).unwrap()
    }

    #[test]
    fn exchange_rules() {
        let up = upres(&[int(0), int(0), q(1, 4)], 2);
        assert_eq!(lt("x*x^-1", &up), LaurentElement::one(Rationals));
        assert_eq!(lt("(e^2 + 1)*x", &up), lt("x*((e+2)^2 + 1)", &up));
        // (x⁻¹ u(e)) x = u(e + n)
        let ux = y_image(&up).mul(&LaurentElement::x_pow(Rationals, 1), 2);
        assert_eq!(ux, LaurentElement::from_e_poly(up.u.shift(&int(2))));
    }

    #[test]
    fn tau_examples() {
        let up = upres(&[int(0), int(1)], 3);
        let e = LaurentElement::e(Rationals);
        // x e x⁻¹ computed through the product
        let conj =
            LaurentElement::x_pow(Rationals, 1).mul(&e, 3).mul(&LaurentElement::x_pow(Rationals, -1), 3);
        assert_eq!(e.tau(3), conj);
        assert_eq!(e.tau(3), lt("e - 3", &up));
        let x = LaurentElement::x_pow(Rationals, 1);
        assert_eq!(x.tau(3), x);
        let c = lt("7/2", &up);
        assert_eq!(c.tau(3), c);
        assert_ne!(lt("e^2 + 1", &up).tau(3), lt("e^2 + 1", &up));
    }

    #[test]
    fn embedding_examples() {
        let up = upres(&[int(0), int(1), int(1)], 2);
        let nf =
            |t: &str| up.normalize(&parse_words(t, Rationals, Alphabet::Abstract, false).unwrap()).unwrap();
        assert_eq!(embed_u(&nf("y"), &up), y_image(&up));
        assert_eq!(embed_u(&nf("x*y"), &up), LaurentElement::from_e_poly(up.u.clone()));
        let expected = LaurentElement::monomial(Rationals, -2, up.u.shift(&int(-2)).mul(&up.u));
        assert_eq!(embed_u(&nf("y^2"), &up), expected);
    }

    #[test]
    fn radial_examples() {
        let up = upres(&[int(0), int(1)], 1);
        let t3 = RadialVector::monomial(3);
        assert_eq!(radial_act(&LaurentElement::x_pow(Rationals, 1), &t3, 1), RadialVector::monomial(4));
        let mut expected = RadialVector::default();
        expected.add_term(3, int(6));
        assert_eq!(radial_act(&LaurentElement::e(Rationals), &t3, 2), expected);
        // rank one: y t^k = k t^{k-1}
        let mut expected = RadialVector::default();
        expected.add_term(2, int(3));
        assert_eq!(radial_act(&y_image(&up), &t3, 1), expected);
    }

    #[test]
    fn dy_relation_only_holds_in_degree_zero() {
        let up = upres(&[int(0), int(1), int(2)], 2);
        let y = y_image(&up);
        let d = lt("e^3 - 2*e + 5", &up);
        assert_eq!(d.mul(&y, 2), y.mul(&d.tau(2), 2));
        // for D = x the relation would read xy = yx
        let x = LaurentElement::x_pow(Rationals, 1);
        assert_ne!(x.mul(&y, 2), y.mul(&x.tau(2), 2));
    }

    #[test]
    fn center_split() {
        let g = QPoly::from_scalars(vec![int(4), int(0), q(1, 2)]);
        let (c, h) = split_center(&g);
        assert_eq!(c, int(4));
        let rebuilt = QPoly::from_scalars(vec![c]).add(&QPoly::identity(Rationals).mul(&h));
        assert_eq!(rebuilt, g);
    }

    #[test]
    fn display_forms() {
        let up = upres(&[int(0), int(0), q(1, 4)], 2);
        assert_eq!(lt("y", &up).to_string(), "1/4*x^-1*e^2");
        assert_eq!(lt("x^2*(e+1) + 3", &up).to_string(), "x^2*(e + 1) + 3");
    }

    #[test]
    fn small_basis_is_independent() {
        let up = upres(&[int(0), int(1)], 1);
        let (rank, count) = normal_form_basis_rank(&up, 3, 2, 10);
        assert_eq!(rank, count);
    }
}
