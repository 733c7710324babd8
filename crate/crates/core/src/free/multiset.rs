use std::collections::BTreeMap;
use std::fmt;

use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::trees::{vee, Forest, Tree};

use super::{curvearrowleft, ForestElement};

/// A finite multiset of forests.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ForestMultiset {
    counts: BTreeMap<Forest, usize>,
}

impl ForestMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(f: Forest) -> Self {
        let mut m = Self::new();
        m.insert(f, 1);
        m
    }

    /// Adds `k` copies of `f`; adding zero copies is a no-op.
    pub fn insert(&mut self, f: Forest, k: usize) {
        if k > 0 {
            *self.counts.entry(f).or_insert(0) += k;
        }
    }

    pub fn union(&mut self, other: &ForestMultiset) {
        for (f, &k) in &other.counts {
            self.insert(f.clone(), k);
        }
    }

    pub fn multiplicity(&self, f: &Forest) -> usize {
        self.counts.get(f).copied().unwrap_or(0)
    }

    /// Total number of elements counted with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.counts.values().sum()
    }

    /// Number of distinct elements.
    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Forest, usize)> {
        self.counts.iter().map(|(f, &k)| (f, k))
    }
}

impl FromIterator<Forest> for ForestMultiset {
    fn from_iter<I: IntoIterator<Item = Forest>>(iter: I) -> Self {
        let mut m = Self::new();
        for f in iter {
            m.insert(f, 1);
        }
        m
    }
}

/// One `k x forest` line per distinct element.
impl fmt::Display for ForestMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (forest, k)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{k} x {forest}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ForestMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter().map(|(k, v)| (k.to_string(), v))).finish()
    }
}

/// The multiset of forests indexing the closed formula.
///
/// `𝓕(T₁) = {{T₁}}` and, splitting off the last tree,
/// `𝓕(T₁…TₖTₖ₊₁)` collects `S·Tₖ₊₁` for every `S ∈ 𝓕(T₁…Tₖ)` (with its
/// multiplicity) together with every `𝓕(T₁…(Tᵢ∨Tₖ₊₁)…Tₖ)`.
/// The empty forest is sent to `{{1}}`.
pub fn forest_multiset(f: &Forest) -> ForestMultiset {
    if f.is_empty() {
        return ForestMultiset::singleton(Forest::unit());
    }
    multiset_of(f.letters())
}

fn multiset_of(trees: &[Tree]) -> ForestMultiset {
    let (last, prefix) = trees.split_last().expect("nonempty");
    if prefix.is_empty() {
        return ForestMultiset::singleton(Forest::letter(last.clone()));
    }
    let mut out = ForestMultiset::new();
    for (s, k) in multiset_of(prefix).iter() {
        out.insert(s.push(last.clone()), k);
    }
    for i in 0..prefix.len() {
        let mut grafted = prefix.to_vec();
        grafted[i] = vee(&prefix[i], last);
        out.union(&multiset_of(&grafted));
    }
    out
}

/// `F * G = Σ_{S ∈ 𝓕(G)} (−1)^{l(S)+l(G)} m(S) F↶S`.
pub fn star_closed_multiset(f: &Forest, g: &Forest) -> ForestElement {
    let mut out = LinComb::zero();
    for (s, k) in forest_multiset(g).iter() {
        let coeff = Scalar::sign_power(s.len() + g.len()) * Scalar::from(k);
        out.add_scaled(&coeff, &curvearrowleft(f, s));
    }
    out
}
