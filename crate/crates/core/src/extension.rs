//! Extension of a magmatic product on letters to the whole tensor algebra.
//!
//! Given a magma `(V, *)`, the product is extended to `T(V)` by
//!
//! * `f * 1 = f` and `1 * f = ε(f)·1`,
//! * `(f₁…fₙ) * y = Σᵢ f₁…(fᵢ*y)…fₙ` for a letter `y`,
//! * `f * (g·y) = (f*g)*y − f*(g*y)` for a letter `y` and a nonempty word `g`.
//!
//! The recursion always peels the last letter off the right factor, so the
//! right length strictly decreases. Both free engines (planar binary forests
//! and sentences of words) are instances of this construction.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

use crate::linear::{bilinear, LinComb};
use crate::scalar::Scalar;
use crate::tensor::{concat, TensorPair, Word};

/// A set of letters with a (not necessarily associative) binary product.
pub trait Magma: Clone + Ord + Hash + Send + Sync {
    fn magma(&self, other: &Self) -> Self;
    /// Positive grading of the letter.
    fn degree(&self) -> usize;
}

/// A bilinear product on `T(L)` given by its values on basis words.
pub trait StarProduct<L: Ord + Clone>: Sync {
    fn star_basis(&self, x: &Word<L>, y: &Word<L>) -> LinComb<Word<L>>;

    fn star(&self, x: &LinComb<Word<L>>, y: &LinComb<Word<L>>) -> LinComb<Word<L>> {
        bilinear(x, y, |a, b| self.star_basis(a, b))
    }
}

/// `(f₁…fₙ) * y = Σᵢ f₁…(fᵢ*y)…fₙ` for a single letter `y`.
pub fn star_right_letter<M: Magma>(f: &Word<M>, y: &M) -> LinComb<Word<M>> {
    let mut out = LinComb::zero();
    for i in 0..f.len() {
        let mut letters = f.0.clone();
        letters[i] = letters[i].magma(y);
        out.add_term(Word(letters), Scalar::one());
    }
    out
}

type Memo<M> = HashMap<(Word<M>, Word<M>), LinComb<Word<M>>>;

/// The recursive extension, memoized on pairs of basis words.
///
/// The cache is an implementation detail: results do not depend on call
/// order, and the type can be shared across threads.
pub struct Extension<M: Magma> {
    memo: RwLock<Memo<M>>,
}

impl<M: Magma> Default for Extension<M> {
    fn default() -> Self {
        Extension {
            memo: RwLock::new(HashMap::new()),
        }
    }
}

impl<M: Magma> Extension<M> {
    pub fn new() -> Self {
        Self::default()
    }

    fn compute(&self, f: &Word<M>, g: &Word<M>) -> LinComb<Word<M>> {
        if g.is_empty() {
            return LinComb::from_term(f.clone());
        }
        if f.is_empty() {
            return LinComb::zero();
        }
        let (prefix, last) = g.split_last().expect("g is nonempty");
        if prefix.is_empty() {
            return star_right_letter(f, last);
        }
        // f * (g'·y) = (f*g')*y − f*(g'*y)
        let mut out = self.star_basis(f, &prefix).map_linear(|h| star_right_letter(h, last));
        let inner = star_right_letter(&prefix, last);
        for (h, c) in inner.iter() {
            out.add_scaled(&-c, &self.star_basis(f, h));
        }
        out
    }
}

impl<M: Magma> StarProduct<M> for Extension<M> {
    fn star_basis(&self, f: &Word<M>, g: &Word<M>) -> LinComb<Word<M>> {
        if g.len() < 2 || f.is_empty() {
            return self.compute(f, g);
        }
        let key = (f.clone(), g.clone());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return hit.clone();
        }
        let value = self.compute(f, g);
        self.memo.write().expect("memo lock").insert(key, value.clone());
        value
    }
}

/// One-shot recursive star product with a per-call cache.
pub fn star_recursive<M: Magma>(x: &LinComb<Word<M>>, y: &LinComb<Word<M>>) -> LinComb<Word<M>> {
    Extension::new().star(x, y)
}

/// `Δ(x)*Δ(y) = Σ (x⁽¹⁾*y⁽¹⁾) ⊗ (x⁽²⁾*y⁽²⁾)`.
pub fn tensor_star<L, P>(product: &P, x: &LinComb<TensorPair<L>>, y: &LinComb<TensorPair<L>>) -> LinComb<TensorPair<L>>
where
    L: Ord + Clone,
    P: StarProduct<L> + ?Sized,
{
    bilinear(x, y, |a, b| {
        let left = product.star_basis(&a.left, &b.left);
        let right = product.star_basis(&a.right, &b.right);
        tensor_of(&left, &right)
    })
}

/// `x ⊗ y` for combinations.
pub fn tensor_of<L: Ord + Clone>(x: &LinComb<Word<L>>, y: &LinComb<Word<L>>) -> LinComb<TensorPair<L>> {
    bilinear(x, y, |a, b| LinComb::from_term(TensorPair::new(a.clone(), b.clone())))
}

/// Applies `m` to each pair: `Σ a ⊗ b ↦ Σ m(a, b)`.
pub fn contract_pairs<L, F>(x: &LinComb<TensorPair<L>>, mut m: F) -> LinComb<Word<L>>
where
    L: Ord + Clone,
    F: FnMut(&Word<L>, &Word<L>) -> LinComb<Word<L>>,
{
    x.map_linear(|p| m(&p.left, &p.right))
}

/// Concatenation of basis words as a combination.
pub fn concat_term<L: Ord + Clone>(a: &Word<L>, b: &Word<L>) -> LinComb<Word<L>> {
    LinComb::from_term(concat(a, b))
}
