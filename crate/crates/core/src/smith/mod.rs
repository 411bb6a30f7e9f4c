//! Smith algebras `S(A, f, n)` and their quotients `U(A, u, n)`.
//!
//! `S(A, f, n)` has generators `x, y, e` with `[e,x] = n x`, `[e,y] = −n y`,
//! `[y,x] = f(e)`. `U(A, u, n)` has the same grading relations together
//! with `x y = u(e)` and `y x = u(e + n)`. When `f(t) = u(t+n) − u(t)`, the
//! Casimir `Ω = x y − u(e)` is central in `S` and `U ≅ S/(Ω)`.
//!
//! Elements are normalized by rewriting adjacent pairs; normal forms are
//! `x^a y^b e^c` in `S` and `y^ℓ e^k` (ℓ ≥ 1) or `x^m e^r` in `U`.

mod rewrite;
mod words;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::numfield::{int, join_signed, power_product, CoeffRing, Scalar, UniPoly};
use rewrite::{normalize, Rules};

pub use words::{parse_words, Letter, Word, WordAlgebra, WordSum};

fn e_poly_words<R: CoeffRing>(p: &UniPoly<R>) -> WordSum<R> {
    let mut out = WordSum::zero(p.ring().clone());
    for (i, c) in p.coeffs().iter().enumerate() {
        out.add_term(vec![Letter::E; i], c.clone());
    }
    out
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Usage("grading step n must be at least 1".into()));
    }
    Ok(())
}

/// The `u` with `u(t+n) − u(t) = f(t)` and `u(0) = 0`.
///
/// Writing `u = Σ_{j≥1} u_j t^j`, the coefficient of `t^i` in the
/// difference is `Σ_{j>i} C(j,i) n^{j−i} u_j`, which is solved from the top
/// degree down.
pub fn u_from_f<R: CoeffRing>(f: &UniPoly<R>, n: u32) -> UniPoly<R> {
    let ring = f.ring().clone();
    let Some(d) = f.degree() else {
        return UniPoly::zero(ring);
    };
    let n = int(n as i64);
    let mut npow = vec![int(1)];
    for k in 1..=d + 1 {
        npow.push(&npow[k - 1] * &n);
    }
    let mut u = vec![ring.zero(); d + 2];
    for i in (0..=d).rev() {
        let mut rhs = f.coeff(i);
        for (j, uj) in u.iter().enumerate().skip(i + 2) {
            let c = Scalar::from_integer(crate::numfield::binomial(j as u32, i as u32)) * &npow[j - i];
            rhs = ring.sub(&rhs, &ring.scale(uj, &c));
        }
        let lead = int(i as i64 + 1) * &n;
        u[i + 1] = ring.scale(&rhs, &(int(1) / lead));
    }
    UniPoly::from_coeffs(ring, u)
}

/// `f(t) = u(t+n) − u(t)`.
pub fn f_from_u<R: CoeffRing>(u: &UniPoly<R>, n: u32) -> UniPoly<R> {
    u.shift(&int(n as i64)).sub(u)
}

/// Presentation of `S(A, f, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SPresentation<R: CoeffRing> {
    pub f: UniPoly<R>,
    pub n: u32,
}

/// Presentation of `U(A, u, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct UPresentation<R: CoeffRing> {
    pub u: UniPoly<R>,
    pub n: u32,
    u_shifted: UniPoly<R>,
}

/// `Σ c x^a y^b e^c` keyed by `(a, b, c)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SNormalForm<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<(u32, u32, u32), R::Elem>,
}

/// `Σ α_{k,ℓ} y^ℓ e^k + Σ β_{m,r} x^m e^r`, with `ℓ ≥ 1` in the first sum.
#[derive(Clone, Debug, PartialEq)]
pub struct UNormalForm<R: CoeffRing> {
    ring: R,
    /// keyed by `(k, ℓ)`
    y_terms: BTreeMap<(u32, u32), R::Elem>,
    /// keyed by `(m, r)`
    x_terms: BTreeMap<(u32, u32), R::Elem>,
}

struct SRules<'a, R: CoeffRing>(&'a SPresentation<R>);
struct URules<'a, R: CoeffRing>(&'a UPresentation<R>);

fn letter_times<R: CoeffRing>(ring: &R, word: Word, c: R::Elem) -> WordSum<R> {
    let mut s = WordSum::zero(ring.clone());
    s.add_term(word, c);
    s
}

impl<R: CoeffRing> Rules<R> for SRules<'_, R> {
    fn rewrite_pair(&self, a: Letter, b: Letter) -> Option<WordSum<R>> {
        let ring = self.0.f.ring();
        let n = ring.from_int(self.0.n as i64);
        use Letter::*;
        Some(match (a, b) {
            (E, X) => letter_times(ring, vec![X, E], ring.one()).add(&letter_times(ring, vec![X], n)),
            (E, Y) => {
                letter_times(ring, vec![Y, E], ring.one()).add(&letter_times(ring, vec![Y], ring.neg(&n)))
            }
            (Y, X) => letter_times(ring, vec![X, Y], ring.one()).add(&e_poly_words(&self.0.f)),
            _ => return None,
        })
    }
}

impl<R: CoeffRing> Rules<R> for URules<'_, R> {
    fn rewrite_pair(&self, a: Letter, b: Letter) -> Option<WordSum<R>> {
        let ring = self.0.u.ring();
        let n = ring.from_int(self.0.n as i64);
        use Letter::*;
        Some(match (a, b) {
            (E, X) => letter_times(ring, vec![X, E], ring.one()).add(&letter_times(ring, vec![X], n)),
            (E, Y) => {
                letter_times(ring, vec![Y, E], ring.one()).add(&letter_times(ring, vec![Y], ring.neg(&n)))
            }
            (X, Y) => e_poly_words(&self.0.u),
            (Y, X) => e_poly_words(&self.0.u_shifted),
            _ => return None,
        })
    }
}

fn leftmost(_: usize) -> usize {
    0
}

impl<R: CoeffRing> SPresentation<R> {
    pub fn new(f: UniPoly<R>, n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(SPresentation { f, n })
    }

    pub fn ring(&self) -> &R {
        self.f.ring()
    }

    /// Normal form by leftmost rewriting.
    pub fn normalize(&self, word: &WordSum<R>) -> Result<SNormalForm<R>> {
        self.normalize_with(word, &mut leftmost)
    }

    /// Normal form where `choose(k)` selects among the `k` available
    /// redexes at every step.
    pub fn normalize_with(
        &self,
        word: &WordSum<R>,
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> Result<SNormalForm<R>> {
        words::reject_inverse(word)?;
        let nf = normalize(word, &SRules(self), choose);
        let mut out = SNormalForm { ring: self.ring().clone(), terms: BTreeMap::new() };
        for (w, c) in nf.terms() {
            let a = w.iter().take_while(|&&l| l == Letter::X).count();
            let b = w[a..].iter().take_while(|&&l| l == Letter::Y).count();
            let e = w.len() - a - b;
            debug_assert!(w[a + b..].iter().all(|&l| l == Letter::E));
            out.terms.insert((a as u32, b as u32, e as u32), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, a: &SNormalForm<R>, b: &SNormalForm<R>) -> SNormalForm<R> {
        self.normalize(&a.to_words().mul(&b.to_words())).expect("normal forms have no x^-1")
    }

    /// The `u` matching this `f`, normalized by `u(0) = 0`.
    pub fn u(&self) -> UniPoly<R> {
        u_from_f(&self.f, self.n)
    }

    pub fn quotient(&self) -> UPresentation<R> {
        UPresentation::new(self.u(), self.n).expect("n already checked")
    }

    /// `Ω = x y − u(e)`.
    pub fn casimir(&self) -> SNormalForm<R> {
        let xy = WordSum::word(self.ring().clone(), vec![Letter::X, Letter::Y]);
        self.normalize(&xy.sub(&e_poly_words(&self.u()))).expect("no inverse")
    }

    /// Commutes with `x`, `y` and `e`.
    pub fn is_central(&self, elem: &SNormalForm<R>) -> bool {
        let w = elem.to_words();
        [Letter::X, Letter::Y, Letter::E].into_iter().all(|g| {
            let g = WordSum::word(self.ring().clone(), vec![g]);
            self.normalize(&w.commutator(&g)).expect("no inverse").is_zero()
        })
    }

    /// The quotient map `S(A, f, n) → U(A, u, n)`; requires
    /// `u(t+n) − u(t) = f(t)`.
    pub fn project_to_u(&self, elem: &SNormalForm<R>, upres: &UPresentation<R>) -> Result<UNormalForm<R>> {
        if upres.n != self.n || f_from_u(&upres.u, upres.n) != self.f {
            return Err(Error::Incompatible(format!("u(t+{}) - u(t) differs from f = {}", upres.n, self.f)));
        }
        upres.normalize(&elem.to_words())
    }
}

impl<R: CoeffRing> UPresentation<R> {
    pub fn new(u: UniPoly<R>, n: u32) -> Result<Self> {
        check_n(n)?;
        let u_shifted = u.shift(&int(n as i64));
        Ok(UPresentation { u, n, u_shifted })
    }

    pub fn ring(&self) -> &R {
        self.u.ring()
    }

    pub fn f(&self) -> UniPoly<R> {
        f_from_u(&self.u, self.n)
    }

    pub fn normalize(&self, word: &WordSum<R>) -> Result<UNormalForm<R>> {
        self.normalize_with(word, &mut leftmost)
    }

    pub fn normalize_with(
        &self,
        word: &WordSum<R>,
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> Result<UNormalForm<R>> {
        words::reject_inverse(word)?;
        let nf = normalize(word, &URules(self), choose);
        let mut out = UNormalForm::zero(self.ring().clone());
        for (w, c) in nf.terms() {
            let lead = w.first().copied().unwrap_or(Letter::E);
            let p = w.iter().take_while(|&&l| l == lead && l != Letter::E).count() as u32;
            let r = w.len() as u32 - p;
            debug_assert!(w[p as usize..].iter().all(|&l| l == Letter::E));
            if lead == Letter::Y {
                out.y_terms.insert((r, p), c.clone());
            } else {
                out.x_terms.insert((p, r), c.clone());
            }
        }
        Ok(out)
    }

    pub fn mul(&self, a: &UNormalForm<R>, b: &UNormalForm<R>) -> UNormalForm<R> {
        self.normalize(&a.to_words().mul(&b.to_words())).expect("normal forms have no x^-1")
    }

    pub fn is_central(&self, elem: &UNormalForm<R>) -> bool {
        let w = elem.to_words();
        [Letter::X, Letter::Y, Letter::E].into_iter().all(|g| {
            let g = WordSum::word(self.ring().clone(), vec![g]);
            self.normalize(&w.commutator(&g)).expect("no inverse").is_zero()
        })
    }
}

impl<R: CoeffRing> SNormalForm<R> {
    pub fn zero(ring: R) -> Self {
        SNormalForm { ring, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &R::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32, c: u32) -> R::Elem {
        self.terms.get(&(a, b, c)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn to_words(&self) -> WordSum<R> {
        let mut out = WordSum::zero(self.ring.clone());
        for (&(a, b, c), v) in &self.terms {
            let mut w = vec![Letter::X; a as usize];
            w.extend(std::iter::repeat_n(Letter::Y, b as usize));
            w.extend(std::iter::repeat_n(Letter::E, c as usize));
            out.add_term(w, v.clone());
        }
        out
    }
}

impl<R: CoeffRing> fmt::Display for SNormalForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|((a1, b1, c1), _), ((a2, b2, c2), _)| {
            (a2 + b2 + c2, a2, b2, c2).cmp(&(a1 + b1 + c1, a1, b1, c1))
        });
        f.write_str(&join_signed(terms.into_iter().map(|(&(a, b, c), v)| {
            let mono = power_product([("x", a as i64), ("y", b as i64), ("e", c as i64)]);
            self.ring.format_term(v, &mono)
        })))
    }
}

impl<R: CoeffRing> UNormalForm<R> {
    pub fn zero(ring: R) -> Self {
        UNormalForm { ring, y_terms: BTreeMap::new(), x_terms: BTreeMap::new() }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.y_terms.is_empty() && self.x_terms.is_empty()
    }

    /// Terms `α y^ℓ e^k` as `((k, ℓ), α)`.
    pub fn y_terms(&self) -> impl Iterator<Item = (&(u32, u32), &R::Elem)> {
        self.y_terms.iter()
    }

    /// Terms `β x^m e^r` as `((m, r), β)`.
    pub fn x_terms(&self) -> impl Iterator<Item = (&(u32, u32), &R::Elem)> {
        self.x_terms.iter()
    }

    /// Adds `c · y^ℓ e^k` (`ℓ ≥ 1`).
    pub fn add_y_term(&mut self, k: u32, l: u32, c: R::Elem) {
        assert!(l >= 1, "y-part requires a positive power of y");
        add_entry(&self.ring, &mut self.y_terms, (k, l), c);
    }

    /// Adds `c · x^m e^r`.
    pub fn add_x_term(&mut self, m: u32, r: u32, c: R::Elem) {
        add_entry(&self.ring, &mut self.x_terms, (m, r), c);
    }

    pub fn to_words(&self) -> WordSum<R> {
        let mut out = WordSum::zero(self.ring.clone());
        for (&(k, l), v) in &self.y_terms {
            let mut w = vec![Letter::Y; l as usize];
            w.extend(std::iter::repeat_n(Letter::E, k as usize));
            out.add_term(w, v.clone());
        }
        for (&(m, r), v) in &self.x_terms {
            let mut w = vec![Letter::X; m as usize];
            w.extend(std::iter::repeat_n(Letter::E, r as usize));
            out.add_term(w, v.clone());
        }
        out
    }
}

fn add_entry<R: CoeffRing>(ring: &R, map: &mut BTreeMap<(u32, u32), R::Elem>, key: (u32, u32), c: R::Elem) {
    let v = match map.remove(&key) {
        Some(old) => ring.add(&old, &c),
        None => c,
    };
    if !ring.is_zero(&v) {
        map.insert(key, v);
    }
}

impl<R: CoeffRing> fmt::Display for UNormalForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // (total degree, is-x-part, generator power, e power)
        let mut terms: Vec<((u32, bool, u32, u32), String)> = Vec::new();
        for (&(m, r), v) in &self.x_terms {
            let mono = power_product([("x", m as i64), ("e", r as i64)]);
            terms.push(((m + r, true, m, r), self.ring.format_term(v, &mono)));
        }
        for (&(k, l), v) in &self.y_terms {
            let mono = power_product([("y", l as i64), ("e", k as i64)]);
            terms.push(((l + k, false, l, k), self.ring.format_term(v, &mono)));
        }
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        f.write_str(&join_signed(terms.into_iter().map(|(_, s)| s)))
    }
}
