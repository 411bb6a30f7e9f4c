use super::words::{Word, WordSum};
use crate::numfield::CoeffRing;

/// A length-two rewriting system on words.
pub(crate) trait Rules<R: CoeffRing> {
    /// Replacement for the pair `(a, b)`, or `None` when the pair is
    /// already in normal order.
    fn rewrite_pair(&self, a: super::Letter, b: super::Letter) -> Option<WordSum<R>>;
}

fn redexes<R: CoeffRing>(rules: &impl Rules<R>, w: &Word) -> Vec<usize> {
    (0..w.len().saturating_sub(1)).filter(|&i| rules.rewrite_pair(w[i], w[i + 1]).is_some()).collect()
}

/// Rewrites until no redex remains. `choose(k)` picks which of the `k`
/// redexes of the current word is rewritten next.
pub(crate) fn normalize<R: CoeffRing>(
    input: &WordSum<R>,
    rules: &impl Rules<R>,
    choose: &mut dyn FnMut(usize) -> usize,
) -> WordSum<R> {
    let ring = input.ring().clone();
    let mut pending = input.clone();
    let mut done = WordSum::zero(ring.clone());
    while let Some((w, c)) = pending.pop_first() {
        let found = redexes(rules, &w);
        if found.is_empty() {
            done.add_term(w, c);
            continue;
        }
        let i = found[choose(found.len()) % found.len()];
        let replacement = rules.rewrite_pair(w[i], w[i + 1]).expect("redex");
        for (mid, mc) in replacement.terms() {
            let mut nw = Vec::with_capacity(w.len() + mid.len());
            nw.extend_from_slice(&w[..i]);
            nw.extend_from_slice(mid);
            nw.extend_from_slice(&w[i + 2..]);
            pending.add_term(nw, ring.mul(&c, mc));
        }
    }
    done
}
