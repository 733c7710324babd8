//! Primitive elements by exact kernel computation, and the dimension
//! count predicted by the PBW series.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::symbol::Alphabet;
use crate::tensor::{iterated_reduced, reduced_unshuffle, Tensor, Word};
use crate::trees::{enumerate_forests, Tree};

use super::{AxiomCheck, AxiomReport, Matrix, Witness};

/// Largest degree accepted by [`primitive_kernel`].
pub const PRIMITIVE_MAX_DEGREE: usize = 6;

/// A basis of `ker Δ̃` inside one homogeneous block.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimitiveKernel<L: Ord> {
    pub degree: usize,
    pub dimension: usize,
    pub basis: Vec<LinComb<Word<L>>>,
}

/// Kernel of the reduced coproduct on the span of `words`.
pub fn primitive_kernel_of<L: Ord + Clone>(degree: usize, words: &[Word<L>]) -> PrimitiveKernel<L> {
    let images: Vec<_> = words.iter().map(reduced_unshuffle).collect();
    let mut rows = BTreeMap::new();
    for p in images.iter().flat_map(|im| im.terms()) {
        let next = rows.len();
        rows.entry(p.clone()).or_insert(next);
    }
    let mut m = Matrix::zeros(rows.len(), words.len());
    for (c, im) in images.iter().enumerate() {
        for (p, v) in im.iter() {
            m.set(rows[p], c, v.clone());
        }
    }
    let basis: Vec<_> = m
        .kernel()
        .into_iter()
        .map(|v| LinComb::from_terms(words.iter().cloned().zip(v)))
        .collect();
    PrimitiveKernel {
        degree,
        dimension: basis.len(),
        basis,
    }
}

/// Primitives of degree `degree` among forests over the alphabet.
pub fn primitive_kernel(degree: usize, alphabet: &Alphabet) -> Result<PrimitiveKernel<Tree>> {
    if degree == 0 {
        return Err(Error::Precondition("primitives live in positive degree".into()));
    }
    if degree > PRIMITIVE_MAX_DEGREE {
        return Err(Error::Budget {
            requested: degree,
            limit: PRIMITIVE_MAX_DEGREE,
        });
    }
    Ok(primitive_kernel_of(degree, &enumerate_forests(degree, alphabet)))
}

/// `h` and `l` from `∏ₖ (1 − tᵏ)^{−lₖ} = h(t) = 1/(1 − m(t))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwSeries {
    /// `h₀, …, h_N`.
    pub h: Vec<i64>,
    /// `l₁, …, l_N`.
    pub l: Vec<i64>,
}

/// Solves for the graded dimensions `l₁…l_N` of the primitives, given the
/// generator series `m₁…m_N`, using `n·[tⁿ] log h = Σ_{k | n} k·lₖ`.
pub fn pbw_dims(generators: &[i64], n: usize) -> Result<PbwSeries> {
    if generators.len() < n {
        return Err(Error::Precondition(format!("need {n} generator counts, got {}", generators.len())));
    }
    let m: Vec<Scalar> = std::iter::once(Scalar::zero()).chain(generators.iter().map(|&g| Scalar::from(g))).collect();
    let mut h = vec![Scalar::one()];
    for k in 1..=n {
        h.push((1..=k).map(|j| &m[j] * &h[k - j]).sum());
    }
    // b_k = k·[t^k] log h, from k·h_k = Σ_{j=1}^{k} b_j h_{k−j}.
    let mut b = vec![Scalar::zero()];
    for (k, hk) in h.iter().enumerate().skip(1) {
        let rest: Scalar = (1..k).map(|j| &b[j] * &h[k - j]).sum();
        b.push(&Scalar::from(k) * hk - rest);
    }
    let mut l = vec![Scalar::zero()];
    for (k, bk) in b.iter().enumerate().skip(1) {
        let lower: Scalar = (1..k).filter(|d| k % d == 0).map(|d| &Scalar::from(d) * &l[d]).sum();
        let lk = (bk - &lower) / Scalar::from(k);
        if !lk.is_integer() {
            return Err(Error::Inconsistent(format!("l_{k} = {lk} is not an integer")));
        }
        l.push(lk);
    }
    let to_int = |v: &Scalar| v.to_i64().ok_or_else(|| Error::Inconsistent(format!("{v} does not fit in i64")));
    Ok(PbwSeries {
        h: h.iter().map(to_int).collect::<Result<_>>()?,
        l: l[1..].iter().map(to_int).collect::<Result<_>>()?,
    })
}

/// `Catalan(n−1)·kⁿ` for `n = 1..=count`: trees with `n` leaves decorated by
/// `k` symbols.
pub fn decorated_tree_counts(count: usize, symbols: usize) -> Vec<i64> {
    let mut catalan = vec![1i64];
    for i in 1..count {
        let next = (0..i).map(|j| catalan[j] * catalan[i - 1 - j]).sum();
        catalan.push(next);
    }
    (1..=count).map(|n| catalan[n - 1] * (symbols as i64).pow(n as u32)).collect()
}

/// Distinct one-generator trees used as primitive generators `v₁…v₄`.
fn distinct_trees(n: usize) -> Vec<Tree> {
    let bullet = Alphabet::bullet();
    let mut out = Vec::new();
    for d in 1.. {
        for f in enumerate_forests(d, &bullet) {
            if f.len() == 1 {
                out.push(f.letters()[0].clone());
            }
        }
        if out.len() >= n {
            out.truncate(n);
            return out;
        }
    }
    unreachable!()
}

/// For distinct trees `v₁…vₙ`: `Δ̃⁽ⁿ⁻¹⁾(v₁⋯vₙ) = Σ_σ v_{σ(1)} ⊗ … ⊗ v_{σ(n)}`,
/// and `Δ̃⁽ᵏ⁾(v₁⋯vₙ) = 0` for `k = n, n+1`.
pub fn symmetrization_check(n: usize) -> Result<AxiomReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::Precondition("symmetrization is checked for 1 <= n <= 4".into()));
    }
    let vs = distinct_trees(n);
    let word: Word<Tree> = Word(vs.clone());
    let x = LinComb::from_term(word.clone());
    let expected: LinComb<Tensor<Tree>> = (0..n)
        .permutations(n)
        .map(|p| Tensor(p.iter().map(|&i| Word::letter(vs[i].clone())).collect()))
        .map(|t| (t, Scalar::one()))
        .collect();
    let mut report = AxiomReport::new(format!("symmetrization on {}", word));
    let r = &iterated_reduced(n - 1, &x) - &expected;
    report.push(AxiomCheck::from_cases(
        "Delta~^(n-1)(v1...vn) = sum over S_n",
        vec![(!r.is_zero()).then(|| Witness::new(vec![word.to_string()], &r))],
    ));
    let vanish = (n..=n + 1)
        .map(|k| {
            let r = iterated_reduced(k, &x);
            (!r.is_zero()).then(|| Witness::new(vec![word.to_string(), format!("k={k}")], &r))
        })
        .collect();
    report.push(AxiomCheck::from_cases("Delta~^(k)(v1...vn) = 0 for k >= n", vanish));
    Ok(report)
}
