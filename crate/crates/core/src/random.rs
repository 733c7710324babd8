//! Seeded random inputs for the randomized suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::symbol::Alphabet;
use crate::tensor::Word;
use crate::trees::{vee, Forest, Tree};
use crate::words::{PlainWord, Sentence};

/// The generator used everywhere a seed is accepted.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn symbol<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> crate::Symbol {
    alphabet.symbols().choose(rng).expect("alphabets are nonempty").clone()
}

/// A tree with exactly `degree ≥ 1` leaves.
pub fn random_tree<R: Rng>(rng: &mut R, degree: usize, alphabet: &Alphabet) -> Tree {
    assert!(degree >= 1, "a tree has at least one leaf");
    if degree == 1 {
        return Tree::Leaf(symbol(rng, alphabet));
    }
    let left = rng.gen_range(1..degree);
    vee(&random_tree(rng, left, alphabet), &random_tree(rng, degree - left, alphabet))
}

/// Splits `total` into a random composition.
fn composition<R: Rng>(rng: &mut R, total: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut current = 0;
    for _ in 0..total {
        current += 1;
        if rng.gen_bool(0.5) {
            parts.push(current);
            current = 0;
        }
    }
    if current > 0 {
        parts.push(current);
    }
    parts
}

/// A forest of total degree `degree` (the unit when `degree = 0`).
pub fn random_forest<R: Rng>(rng: &mut R, degree: usize, alphabet: &Alphabet) -> Forest {
    composition(rng, degree)
        .into_iter()
        .map(|d| random_tree(rng, d, alphabet))
        .collect()
}

/// A sentence with `letters` letters in total.
pub fn random_sentence<R: Rng>(rng: &mut R, letters: usize, alphabet: &Alphabet) -> Sentence {
    composition(rng, letters)
        .into_iter()
        .map(|n| (0..n).map(|_| symbol(rng, alphabet)).collect::<PlainWord>())
        .collect()
}

/// The letters of `w` in a uniformly random order.
pub fn shuffled<R: Rng, L: Clone>(rng: &mut R, w: &Word<L>) -> Word<L> {
    let mut letters = w.letters().to_vec();
    letters.shuffle(rng);
    Word(letters)
}
