//! The tensor bialgebra `T(L)` over an arbitrary letter type: concatenation,
//! the unshuffle coproduct, counit, and (iterated) reduced coproducts.
//!
//! Letters are primitive: `Δ(v) = 1⊗v + v⊗1`. Everything here is generic, so
//! forests of trees and sentences of words reuse the same machinery.

use std::fmt;

use crate::linear::{bilinear, LinComb};
use crate::scalar::Scalar;
use crate::symbol::Symbol;

/// A (possibly empty) word of letters; the empty word is the unit `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word<L>(pub Vec<L>);

impl<L: Clone> Word<L> {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    /// The subword at the given (increasing) positions.
    pub fn select(&self, positions: &[usize]) -> Word<L> {
        Word(positions.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// `self` with `l` appended.
    pub fn push(&self, l: L) -> Word<L> {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    /// Splits off the last letter, `None` for the unit.
    pub fn split_last(&self) -> Option<(Word<L>, &L)> {
        let (last, rest) = self.0.split_last()?;
        Some((Word(rest.to_vec()), last))
    }
}

impl<L> From<Vec<L>> for Word<L> {
    fn from(v: Vec<L>) -> Self {
        Word(v)
    }
}

impl<L> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<L: fmt::Debug> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// Letters of a plain word printed side by side; the unit prints as `1`.
impl fmt::Display for Word<Symbol> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `x ⊗ y` for words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorPair<L> {
    pub left: Word<L>,
    pub right: Word<L>,
}

impl<L> TensorPair<L> {
    pub fn new(left: Word<L>, right: Word<L>) -> Self {
        TensorPair { left, right }
    }

    pub fn swapped(&self) -> Self
    where
        L: Clone,
    {
        TensorPair::new(self.right.clone(), self.left.clone())
    }
}

impl<L> fmt::Display for TensorPair<L>
where
    Word<L>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.left, self.right)
    }
}

/// A `k`-fold tensor `x₁ ⊗ … ⊗ x_k` of words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<L>(pub Vec<Word<L>>);

impl<L> fmt::Display for Tensor<L>
where
    Word<L>: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

pub fn concat<L: Clone>(u: &Word<L>, v: &Word<L>) -> Word<L> {
    let mut out = Vec::with_capacity(u.len() + v.len());
    out.extend_from_slice(&u.0);
    out.extend_from_slice(&v.0);
    Word(out)
}

/// Concatenation extended bilinearly.
pub fn product<L: Ord + Clone>(x: &LinComb<Word<L>>, y: &LinComb<Word<L>>) -> LinComb<Word<L>> {
    bilinear(x, y, |u, v| LinComb::from_term(concat(u, v)))
}

/// `Δ(w) = Σ_I w_I ⊗ w_{Iᶜ}` over all subsets `I` of positions.
pub fn unshuffle<L: Ord + Clone>(w: &Word<L>) -> LinComb<TensorPair<L>> {
    let n = w.len();
    assert!(n < usize::BITS as usize, "word too long to unshuffle");
    let mut out = LinComb::zero();
    for mask in 0usize..(1 << n) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, l) in w.0.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(l.clone());
            } else {
                right.push(l.clone());
            }
        }
        out.add_term(TensorPair::new(Word(left), Word(right)), Scalar::one());
    }
    out
}

pub fn coproduct<L: Ord + Clone>(x: &LinComb<Word<L>>) -> LinComb<TensorPair<L>> {
    x.map_linear(unshuffle)
}

/// Coefficient of the empty word.
pub fn counit<L: Ord + Clone>(x: &LinComb<Word<L>>) -> Scalar {
    x.coeff(&Word::unit())
}

pub fn counit_word<L>(w: &Word<L>) -> Scalar {
    if w.0.is_empty() {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// `ρ(x) = x − ε(x)·1`.
pub fn augmentation<L: Ord + Clone>(x: &LinComb<Word<L>>) -> LinComb<Word<L>> {
    let mut out = x.clone();
    out.add_term(Word::unit(), -counit(x));
    out
}

/// `Δ̃(w) = Δ(w) − 1⊗w − w⊗1` on a basis word, with `Δ̃(1) = 0`.
pub fn reduced_unshuffle<L: Ord + Clone>(w: &Word<L>) -> LinComb<TensorPair<L>> {
    if w.is_empty() {
        return LinComb::zero();
    }
    let mut out = unshuffle(w);
    out.add_term(TensorPair::new(Word::unit(), w.clone()), -Scalar::one());
    out.add_term(TensorPair::new(w.clone(), Word::unit()), -Scalar::one());
    out
}

pub fn reduced_coproduct<L: Ord + Clone>(x: &LinComb<Word<L>>) -> LinComb<TensorPair<L>> {
    x.map_linear(reduced_unshuffle)
}

/// `Δ̃⁽ᵏ⁾`, landing in `(k+1)`-fold tensors: `Δ̃⁽⁰⁾ = ρ`, and each further
/// step applies `Δ̃` to the first tensor factor.
pub fn iterated_reduced<L: Ord + Clone>(k: usize, x: &LinComb<Word<L>>) -> LinComb<Tensor<L>> {
    let mut current: LinComb<Tensor<L>> = augmentation(x).map_terms(|w| Tensor(vec![w.clone()]));
    for _ in 0..k {
        current = current.map_linear(|t| {
            let (first, rest) = t.0.split_first().expect("tensors are nonempty");
            reduced_unshuffle(first).map_terms(|p| {
                let mut factors = Vec::with_capacity(t.0.len() + 1);
                factors.push(p.left.clone());
                factors.push(p.right.clone());
                factors.extend(rest.iter().cloned());
                Tensor(factors)
            })
        });
        if current.is_zero() {
            break;
        }
    }
    current
}

/// `(Δ ⊗ Id)` applied to a combination of pairs, giving triple tensors.
pub fn coproduct_left<L: Ord + Clone>(x: &LinComb<TensorPair<L>>) -> LinComb<Tensor<L>> {
    x.map_linear(|p| {
        unshuffle(&p.left).map_terms(|q| Tensor(vec![q.left.clone(), q.right.clone(), p.right.clone()]))
    })
}

/// `(Id ⊗ Δ)` applied to a combination of pairs, giving triple tensors.
pub fn coproduct_right<L: Ord + Clone>(x: &LinComb<TensorPair<L>>) -> LinComb<Tensor<L>> {
    x.map_linear(|p| {
        unshuffle(&p.right).map_terms(|q| Tensor(vec![p.left.clone(), q.left.clone(), q.right.clone()]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word<Symbol> {
        s.chars().map(Symbol::from).collect()
    }

    fn pair(a: &str, b: &str) -> TensorPair<Symbol> {
        let f = |s: &str| if s == "1" { Word::unit() } else { w(s) };
        TensorPair::new(f(a), f(b))
    }

    #[test]
    fn concat_unit_and_length() {
        assert_eq!(concat(&Word::unit(), &w("ab")), w("ab"));
        assert_eq!(concat(&w("ab"), &w("c")), w("abc"));
        assert_eq!(concat(&w("ab"), &w("cde")).len(), 5);
        assert_eq!(w("").to_string(), "1");
    }

    #[test]
    fn unshuffle_small() {
        assert_eq!(unshuffle(&Word::<Symbol>::unit()), LinComb::from_term(pair("1", "1")));
        assert_eq!(unshuffle(&w("v")), LinComb::sum_of([pair("1", "v"), pair("v", "1")]));
        let expected = LinComb::sum_of([pair("1", "xy"), pair("x", "y"), pair("y", "x"), pair("xy", "1")]);
        assert_eq!(unshuffle(&w("xy")), expected);
    }

    #[test]
    fn counit_projection() {
        assert_eq!(counit(&LinComb::from_term(Word::<Symbol>::unit())), Scalar::one());
        assert_eq!(counit(&LinComb::from_term(w("ab"))), Scalar::zero());
        let x = LinComb::from_terms([(Word::unit(), Scalar::from(3i64)), (w("ab"), Scalar::from(2i64))]);
        assert_eq!(counit(&x), Scalar::from(3i64));
    }

    #[test]
    fn reduced_coproduct_small() {
        assert!(reduced_unshuffle(&w("v")).is_zero());
        assert!(reduced_unshuffle(&Word::<Symbol>::unit()).is_zero());
        assert_eq!(reduced_unshuffle(&w("xy")), LinComb::sum_of([pair("x", "y"), pair("y", "x")]));
        // Repeated letter: Δ̃(aa) = 2 a⊗a.
        assert_eq!(reduced_unshuffle(&w("aa")), LinComb::from_scaled(Scalar::from(2i64), pair("a", "a")));
    }

    #[test]
    fn iterated_reduced_on_three_letters() {
        let x = LinComb::from_term(w("xyz"));
        let d2 = iterated_reduced(2, &x);
        assert_eq!(d2.len(), 6);
        for (t, c) in d2.iter() {
            assert!(c.is_one());
            assert_eq!(t.0.len(), 3);
            assert!(t.0.iter().all(|f| f.len() == 1));
        }
        assert!(iterated_reduced(3, &x).is_zero());
        let d0 = iterated_reduced(0, &LinComb::from_terms([(Word::unit(), Scalar::one()), (w("x"), Scalar::one())]));
        assert_eq!(d0, LinComb::from_term(Tensor(vec![w("x")])));
    }
}
