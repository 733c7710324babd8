//! Finite formal linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A finite linear combination `Σ c_b · b` with exact rational coefficients.
///
/// Terms are kept in the basis order, and no stored coefficient is zero, so
/// structural equality is equality of vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(term: B) -> Self {
        Self::from_scaled(Scalar::one(), term)
    }

    pub fn from_scaled(coeff: Scalar, term: B) -> Self {
        let mut out = Self::zero();
        out.add_term(term, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    /// Sum of the given terms, each with coefficient one.
    pub fn sum_of<I: IntoIterator<Item = B>>(terms: I) -> Self {
        Self::from_terms(terms.into_iter().map(|b| (b, Scalar::one())))
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

    pub fn coeff(&self, term: &B) -> Scalar {
        self.terms.get(term).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Scalar> {
        self.terms.iter()
    }

    pub fn terms(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, term: B, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, coeff: &Scalar, other: &LinComb<B>) {
        if coeff.is_zero() {
            return;
        }
        for (b, c) in other.iter() {
            self.add_term(b.clone(), coeff * c);
        }
    }

    pub fn add_assign_ref(&mut self, other: &LinComb<B>) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinComb<B> {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * s)).collect(),
        }
    }

    /// Extends a map on basis terms linearly.
    pub fn map_linear<C: Ord + Clone, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Relabels basis terms; images that collide are summed.
    pub fn map_terms<C: Ord + Clone, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B) -> C,
    {
        LinComb::from_terms(self.iter().map(|(b, c)| (f(b), c.clone())))
    }

    pub fn into_terms(self) -> BTreeMap<B, Scalar> {
        self.terms
    }
}

/// The bilinear extension of a rule on pairs of basis terms.
pub fn bilinear<A, B, C, F>(x: &LinComb<A>, y: &LinComb<B>, mut rule: F) -> LinComb<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: FnMut(&A, &B) -> LinComb<C>,
{
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let r = rule(a, b);
            out.add_scaled(&(ca * cb), &r);
        }
    }
    out
}

/// Lifts a basis rule to a bilinear map on linear combinations.
pub fn bilinear_lift<A, B, C, F>(rule: F) -> impl Fn(&LinComb<A>, &LinComb<B>) -> LinComb<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: Fn(&A, &B) -> LinComb<C>,
{
    move |x, y| bilinear(x, y, &rule)
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;
    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;
    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        for (b, c) in rhs.terms {
            self.add_term(b, -c);
        }
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> FromIterator<(B, Scalar)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Scalar)>>(iter: I) -> Self {
        LinComb::from_terms(iter)
    }
}

/// Text form: `+c1 t1 -c2 t2 ...`, and `0` for the empty combination.
impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{} {b}", c.abs())?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Display> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One entry of the structured serialization of a linear combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialTerm {
    pub coefficient: String,
    pub term: String,
}

impl<B: Ord + fmt::Display> LinComb<B> {
    /// Structured form: `[{coefficient: "p/q", term: "..."}]` in basis order.
    pub fn to_serial(&self) -> Vec<SerialTerm> {
        self.terms
            .iter()
            .map(|(b, c)| SerialTerm {
                coefficient: c.to_fraction_string(),
                term: b.to_string(),
            })
            .collect()
    }
}

/// Rebuilds a combination from its structured form, parsing each term.
pub fn from_serial<B, F>(entries: &[SerialTerm], mut parse: F) -> crate::Result<LinComb<B>>
where
    B: Ord + Clone,
    F: FnMut(&str) -> crate::Result<B>,
{
    let mut out = LinComb::zero();
    for e in entries {
        let c: Scalar = e.coefficient.parse()?;
        out.add_term(parse(&e.term)?, c);
    }
    Ok(out)
}
