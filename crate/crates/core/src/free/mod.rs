//! The free Post-Lie / Post-Hopf engine on forests of decorated planar
//! binary trees.
//!
//! Three independent descriptions of the star product live here:
//!
//! * [`star_recursive`], the generic extension of grafting to forests;
//! * [`star_closed_multiset`], a signed sum of consecutive right grafts
//!   indexed by the multiset [`forest_multiset`];
//! * [`star_closed_perm`], the same sum re-indexed by the symmetric group
//!   through [`phi_n`].

mod closed;
mod levelled;
mod multiset;
mod perm;

pub use closed::{phi_n, phi_n_image, star_closed_perm};
pub use levelled::{graft_onto_levelled, word_to_levelled, LevelledTree, WordNR};
pub use multiset::{forest_multiset, star_closed_multiset, ForestMultiset};
pub use perm::{normal_form, permutations, sentence_to_perm, PackedSentence, Permutation};

use crate::extension::{star_right_letter, Extension, StarProduct};
use crate::linear::LinComb;
use crate::trees::{Forest, Tree};

/// A linear combination of forests.
pub type ForestElement = LinComb<Forest>;

/// The star product on forests, memoized across calls.
pub type ForestEngine = Extension<Tree>;

/// `F * T = Σᵢ F₁…(Fᵢ∨T)…Fₙ`; zero for the empty forest.
pub fn star_right_tree(f: &Forest, t: &Tree) -> ForestElement {
    star_right_letter(f, t)
}

/// The recursive star product, extended bilinearly.
pub fn star_recursive(x: &ForestElement, y: &ForestElement) -> ForestElement {
    ForestEngine::new().star(x, y)
}

/// Star product of two basis forests by recursion.
pub fn star_forests(f: &Forest, g: &Forest) -> ForestElement {
    ForestEngine::new().star_basis(f, g)
}

/// `F ↶ S = (((F*S₁)*S₂)*…)*Sₙ`, each step a right graft by one tree.
pub fn curvearrowleft(f: &Forest, s: &Forest) -> ForestElement {
    let mut acc = LinComb::from_term(f.clone());
    for t in s.letters() {
        acc = acc.map_linear(|h| star_right_tree(h, t));
    }
    acc
}
