use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::numfield::{join_signed, CoeffRing, Scalar};
use crate::parse::{parse_expr, Alphabet, ExprAlgebra};

/// Generators of the abstract algebras; `XInv` only exists in the
/// localized model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
    E,
    XInv,
}

impl Letter {
    pub fn symbol(self, alphabet: Alphabet) -> &'static str {
        match (self, alphabet) {
            (Letter::X, Alphabet::Abstract) => "x",
            (Letter::Y, Alphabet::Abstract) => "y",
            (Letter::E, Alphabet::Abstract) => "e",
            (Letter::X, Alphabet::Operators) => "X",
            (Letter::Y, Alphabet::Operators) => "Y",
            (Letter::E, Alphabet::Operators) => "E",
            (Letter::XInv, Alphabet::Abstract) => "x^-1",
            (Letter::XInv, Alphabet::Operators) => "X^-1",
        }
    }
}

pub type Word = Vec<Letter>;

/// Element of the free algebra on [`Letter`]s: a finite `A`-linear
/// combination of words, with no relations applied.
#[derive(Clone, Debug, PartialEq)]
pub struct WordSum<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<Word, R::Elem>,
}

impl<R: CoeffRing> WordSum<R> {
    pub fn zero(ring: R) -> Self {
        WordSum { ring, terms: BTreeMap::new() }
    }

    pub fn word(ring: R, word: Word) -> Self {
        let one = ring.one();
        let mut s = Self::zero(ring);
        s.add_term(word, one);
        s
    }

    pub fn scalar(ring: R, c: R::Elem) -> Self {
        let mut s = Self::zero(ring);
        s.add_term(Vec::new(), c);
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn add_term(&mut self, word: Word, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(v) => {
                *v = self.ring.add(v, &c);
                if self.ring.is_zero(v) {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &R::Elem)> {
        self.terms.iter()
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

    pub(crate) fn pop_first(&mut self) -> Option<(Word, R::Elem)> {
        self.terms.pop_first()
    }

    pub fn contains_letter(&self, l: Letter) -> bool {
        self.terms.keys().any(|w| w.contains(&l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (w, v) in &self.terms {
            out.add_term(w.clone(), self.ring.mul(v, c));
        }
        out
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, self.ring.mul(c1, c2));
            }
        }
        out
    }

    /// `self·other − other·self` in the free algebra.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn display(&self, alphabet: Alphabet) -> String {
        join_signed(self.terms.iter().map(|(w, c)| {
            let mono = w.iter().map(|l| l.symbol(alphabet)).collect::<Vec<_>>().join("*");
            self.ring.format_term(c, &mono)
        }))
    }
}

impl<R: CoeffRing> fmt::Display for WordSum<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(Alphabet::Abstract))
    }
}

/// Evaluates expressions into the free algebra. `x^-1` is accepted only
/// when `allow_inverse` is set.
pub struct WordAlgebra<R: CoeffRing> {
    pub ring: R,
    pub alphabet: Alphabet,
    pub allow_inverse: bool,
}

impl<R: CoeffRing> ExprAlgebra for WordAlgebra<R> {
    type Value = WordSum<R>;

    fn constant(&self, q: &Scalar) -> WordSum<R> {
        WordSum::scalar(self.ring.clone(), self.ring.from_scalar(q))
    }
    fn generator(&self, name: &str) -> Option<WordSum<R>> {
        let [x, y, e] = self.alphabet.generators();
        let letter = if name == x {
            Letter::X
        } else if name == y {
            Letter::Y
        } else if name == e {
            Letter::E
        } else {
            return None;
        };
        Some(WordSum::word(self.ring.clone(), vec![letter]))
    }
    fn add(&self, a: &WordSum<R>, b: &WordSum<R>) -> WordSum<R> {
        a.add(b)
    }
    fn neg(&self, a: &WordSum<R>) -> WordSum<R> {
        a.neg()
    }
    fn mul(&self, a: &WordSum<R>, b: &WordSum<R>) -> WordSum<R> {
        a.mul(b)
    }
    fn inverse(&self, a: &WordSum<R>) -> Option<WordSum<R>> {
        if !self.allow_inverse || a.len() != 1 {
            return None;
        }
        let (w, c) = a.terms().next()?;
        let inv = match w.as_slice() {
            [Letter::X] => Letter::XInv,
            [Letter::XInv] => Letter::X,
            _ => return None,
        };
        (*c == self.ring.one()).then(|| WordSum::word(self.ring.clone(), vec![inv]))
    }
}

/// Parses a word expression over `x, y, e` (or `X, Y, E`) with rational
/// coefficients.
pub fn parse_words<R: CoeffRing>(
    text: &str,
    ring: R,
    alphabet: Alphabet,
    allow_inverse: bool,
) -> Result<WordSum<R>> {
    parse_expr(text)?.eval(&WordAlgebra { ring, alphabet, allow_inverse })
}

pub(crate) fn reject_inverse<R: CoeffRing>(w: &WordSum<R>) -> Result<()> {
    if w.contains_letter(Letter::XInv) {
        return Err(Error::Usage("x^-1 is only available in the localized model".into()));
    }
    Ok(())
}
