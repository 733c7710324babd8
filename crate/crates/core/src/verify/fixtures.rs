//! Structure-constant fixtures extracted from the free engines.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::extension::{Extension, StarProduct};
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::symbol::Alphabet;
use crate::tensor::{product, Word};
use crate::trees::{enumerate_forests, enumerate_prtrees, left_graft_sum, Forest, PRTree, Tree};
use crate::words::{enumerate_sentences, PlainWord, Sentence};

use super::finite::{FinPostLie, Vector};
use super::primitives::primitive_kernel_of;
use super::Matrix;

/// Dimension 1, zero bracket, `e₀ * e₀ = e₀`.
pub fn trivial_fixture() -> FinPostLie {
    let mut a = FinPostLie::new(1).expect("positive dimension");
    a.set_product(0, 0, Vector::from_term(0)).expect("in range");
    a
}

/// Primitives of forests of degree `1..=max_degree`, with the commutator
/// bracket and the star product, everything of higher degree set to zero.
///
/// Returns the constants and the chosen basis of primitives.
pub fn truncated_tree_fixture(max_degree: usize, alphabet: &Alphabet) -> Result<(FinPostLie, Vec<LinComb<Forest>>)> {
    let levels: Vec<Vec<Forest>> = (0..=max_degree).map(|d| enumerate_forests(d, alphabet)).collect();
    truncated(&levels, &Extension::<Tree>::new())
}

/// The same construction on sentences of words.
pub fn truncated_word_fixture(max_degree: usize, alphabet: &Alphabet) -> Result<(FinPostLie, Vec<LinComb<Sentence>>)> {
    let levels: Vec<Vec<Sentence>> = (0..=max_degree).map(|d| enumerate_sentences(d, alphabet)).collect();
    truncated(&levels, &Extension::<PlainWord>::new())
}

fn truncated<L, P>(levels: &[Vec<Word<L>>], star: &P) -> Result<(FinPostLie, Vec<LinComb<Word<L>>>)>
where
    L: Ord + Clone + std::hash::Hash,
    P: StarProduct<L>,
{
    let max = levels.len() - 1;
    let index: Vec<HashMap<&Word<L>, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(i, w)| (w, i)).collect()).collect();
    // Kernel basis per degree, as coordinate columns in the word basis.
    let mut basis = Vec::new();
    let mut degree_of = Vec::new();
    let mut offset = vec![0; max + 2];
    let mut columns: Vec<Matrix> = vec![Matrix::zeros(1, 0)];
    for d in 1..=max {
        let kernel = primitive_kernel_of(d, &levels[d]);
        offset[d] = basis.len();
        let cols: Vec<Vec<Scalar>> = kernel
            .basis
            .iter()
            .map(|v| levels[d].iter().map(|w| v.coeff(w)).collect())
            .collect();
        columns.push(Matrix::from_columns(levels[d].len(), &cols));
        for v in kernel.basis {
            basis.push(v);
            degree_of.push(d);
        }
    }
    offset[max + 1] = basis.len();
    let dim = basis.len();
    let coordinates = |x: &LinComb<Word<L>>, d: usize| -> Result<Vector> {
        if x.is_zero() || d > max {
            return Ok(Vector::zero());
        }
        let mut v = vec![Scalar::zero(); levels[d].len()];
        for (w, c) in x.iter() {
            let i = index[d]
                .get(w)
                .ok_or_else(|| Error::Inconsistent(format!("term of unexpected degree in degree {d}")))?;
            v[*i] = c.clone();
        }
        let solved = columns[d].solve(&v)?;
        Ok(LinComb::from_terms(solved.into_iter().enumerate().map(|(k, c)| (offset[d] + k, c))))
    };

    let mut a = FinPostLie::new(dim.max(1))?;
    for i in 0..dim {
        for j in 0..dim {
            let d = degree_of[i] + degree_of[j];
            if d > max {
                continue;
            }
            let bracket = &product(&basis[i], &basis[j]) - &product(&basis[j], &basis[i]);
            a.set_bracket(i, j, coordinates(&bracket, d)?)?;
            a.set_product(i, j, coordinates(&star.star(&basis[i], &basis[j]), d)?)?;
        }
    }
    Ok((a, basis))
}

/// Planar rooted trees with at most `max_nodes` nodes, zero bracket, and
/// the left grafting on all nodes as product (larger trees dropped).
pub fn left_graft_fixture(max_nodes: usize) -> (FinPostLie, Vec<PRTree>) {
    let trees: Vec<PRTree> = (1..=max_nodes).flat_map(enumerate_prtrees).collect();
    let index: HashMap<&PRTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut a = FinPostLie::new(trees.len()).expect("at least one tree");
    for (i, t1) in trees.iter().enumerate() {
        for (j, t2) in trees.iter().enumerate() {
            if t1.node_count() + t2.node_count() > max_nodes {
                continue;
            }
            let v = LinComb::from_terms(left_graft_sum(t1, t2).iter().map(|(t, c)| (index[t], c.clone())));
            a.set_product(i, j, v).expect("in range");
        }
    }
    (a, trees)
}
