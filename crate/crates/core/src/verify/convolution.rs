//! The convolution inverse of right multiplication on the one-generator
//! free algebra, degree by degree.
//!
//! For a basis forest `x`, `γ(x)` is the map `y ↦ y*x`. It raises degree by
//! `deg x`, so each endomorphism is stored as one matrix per source degree.
//! The inverse is built from the reduced coproduct:
//! `β(1) = Id`, `β(x) = −γ(x) − β(x′)∘γ(x″)`, and symmetrically
//! `α(x) = −γ(x) − γ(x′)∘α(x″)`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::extension::StarProduct;
use crate::free::ForestEngine;
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::symbol::Alphabet;
use crate::tensor::{reduced_unshuffle, unshuffle};
use crate::trees::{enumerate_forests, forest_degree, Forest};

use super::{AxiomCheck, AxiomReport, Matrix, Witness};

/// Largest budget accepted by [`convolution_inverse`].
pub const CONVOLUTION_MAX_BUDGET: usize = 4;

/// A linear map raising degree by `shift`, known on source degrees
/// `0..=budget − shift`; `blocks[d]` maps degree `d` to degree `d + shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndo {
    pub shift: usize,
    pub blocks: Vec<Matrix>,
}

impl GradedEndo {
    fn identity(dims: &[usize]) -> GradedEndo {
        GradedEndo {
            shift: 0,
            blocks: dims.iter().map(|&n| Matrix::identity(n)).collect(),
        }
    }

    fn zero(dims: &[usize], shift: usize) -> GradedEndo {
        let budget = dims.len() - 1;
        GradedEndo {
            shift,
            blocks: (0..=budget - shift).map(|d| Matrix::zeros(dims[d + shift], dims[d])).collect(),
        }
    }

    /// `self ∘ other`.
    fn after(&self, other: &GradedEndo) -> GradedEndo {
        let shift = self.shift + other.shift;
        let count = other.blocks.len().saturating_sub(self.shift);
        GradedEndo {
            shift,
            blocks: (0..count).map(|d| &self.blocks[d + other.shift] * &other.blocks[d]).collect(),
        }
    }

    fn add_scaled(&mut self, c: &Scalar, other: &GradedEndo) {
        assert_eq!(self.shift, other.shift, "shifts differ");
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a = a.add(&b.scale(c));
        }
    }

    fn neg(&self) -> GradedEndo {
        GradedEndo {
            shift: self.shift,
            blocks: self.blocks.iter().map(Matrix::neg).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// First nonzero block and its entries, for witnesses.
    fn first_nonzero(&self) -> Option<(usize, LinComb<String>)> {
        self.blocks.iter().enumerate().find(|(_, b)| !b.is_zero()).map(|(d, b)| {
            let entries = b.nonzero_entries().into_iter().map(|(r, c, v)| (format!("({r},{c})"), v));
            (d, LinComb::from_terms(entries))
        })
    }
}

/// `β`, `α` and `γ` on every basis forest up to the budget, with the
/// verification report.
#[derive(Clone, Debug)]
pub struct ConvolutionInverse {
    pub budget: usize,
    pub basis: Vec<Vec<Forest>>,
    pub gamma: BTreeMap<Forest, GradedEndo>,
    pub beta: BTreeMap<Forest, GradedEndo>,
    pub alpha: BTreeMap<Forest, GradedEndo>,
    pub report: AxiomReport,
}

pub fn convolution_inverse(budget: usize) -> Result<ConvolutionInverse> {
    convolution_inverse_with_limit(budget, CONVOLUTION_MAX_BUDGET)
}

pub fn convolution_inverse_with_limit(budget: usize, limit: usize) -> Result<ConvolutionInverse> {
    if budget > limit {
        return Err(Error::Budget { requested: budget, limit });
    }
    let alphabet = Alphabet::bullet();
    let basis: Vec<Vec<Forest>> = (0..=budget).map(|d| enumerate_forests(d, &alphabet)).collect();
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let index: Vec<HashMap<&Forest, usize>> =
        basis.iter().map(|level| level.iter().enumerate().map(|(i, f)| (f, i)).collect()).collect();
    let engine = ForestEngine::new();

    let gamma_of = |x: &Forest| -> GradedEndo {
        let m = forest_degree(x);
        let blocks = (0..=budget - m)
            .map(|d| {
                let mut block = Matrix::zeros(dims[d + m], dims[d]);
                for (c, y) in basis[d].iter().enumerate() {
                    for (t, v) in engine.star_basis(y, x).iter() {
                        block.set(index[d + m][t], c, v.clone());
                    }
                }
                block
            })
            .collect();
        GradedEndo { shift: m, blocks }
    };

    let all: Vec<&Forest> = basis.iter().flatten().collect();
    let gamma: BTreeMap<Forest, GradedEndo> = all.iter().map(|&x| (x.clone(), gamma_of(x))).collect();

    let mut beta: BTreeMap<Forest, GradedEndo> = BTreeMap::new();
    let mut alpha: BTreeMap<Forest, GradedEndo> = BTreeMap::new();
    beta.insert(Forest::unit(), GradedEndo::identity(&dims));
    alpha.insert(Forest::unit(), GradedEndo::identity(&dims));
    // `all` is sorted by degree, so both factors of Δ̃(x) are already known.
    for &x in all.iter().skip(1) {
        let gx = &gamma[x];
        let mut b = gx.neg();
        let mut a = gx.neg();
        for (p, c) in reduced_unshuffle(x).iter() {
            b.add_scaled(&-c, &beta[&p.left].after(&gamma[&p.right]));
            a.add_scaled(&-c, &gamma[&p.left].after(&alpha[&p.right]));
        }
        beta.insert(x.clone(), b);
        alpha.insert(x.clone(), a);
    }

    let mut report = AxiomReport::new(format!("convolution inverse of right multiplication, degree <= {budget}"));
    let endo_witness = |x: &Forest, e: &GradedEndo| {
        e.first_nonzero()
            .map(|(d, r)| Witness::new(vec![x.to_string(), format!("source degree {d}")], &r))
    };
    let convolve = |left: &BTreeMap<Forest, GradedEndo>, right: &BTreeMap<Forest, GradedEndo>, x: &Forest| {
        let mut acc = GradedEndo::zero(&dims, forest_degree(x));
        for (p, c) in unshuffle(x).iter() {
            acc.add_scaled(c, &left[&p.left].after(&right[&p.right]));
        }
        if x.is_empty() {
            acc.add_scaled(&-Scalar::one(), &GradedEndo::identity(&dims));
        }
        acc
    };
    report.push(AxiomCheck::from_cases(
        "gamma(1) = Id",
        vec![endo_witness(&Forest::unit(), &{
            let mut r = gamma[&Forest::unit()].clone();
            r.add_scaled(&-Scalar::one(), &GradedEndo::identity(&dims));
            r
        })],
    ));
    report.push(AxiomCheck::from_cases(
        "beta*gamma = eps Id",
        all.iter().map(|&x| endo_witness(x, &convolve(&beta, &gamma, x))).collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "gamma*alpha = eps Id",
        all.iter().map(|&x| endo_witness(x, &convolve(&gamma, &alpha, x))).collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "beta = alpha",
        all.iter()
            .map(|&x| {
                let mut d = beta[x].clone();
                d.add_scaled(&-Scalar::one(), &alpha[x]);
                endo_witness(x, &d)
            })
            .collect(),
    ));
    Ok(ConvolutionInverse {
        budget,
        basis,
        gamma,
        beta,
        alpha,
        report,
    })
}
