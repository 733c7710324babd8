//! The associative case: the star product on sentences of nonempty words,
//! where the base product is concatenation of words.
//!
//! A sentence `w₁|…|wₙ` is a word in the letters `T(V)₊`; the unit is the
//! empty sentence `1`.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::extension::{Extension, Magma, StarProduct};
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::symbol::{Alphabet, Symbol};
use crate::tensor::{concat, Word};

/// A nonempty word over the alphabet.
pub type PlainWord = Word<Symbol>;

/// A sentence of nonempty words; the empty sentence is the unit.
pub type Sentence = Word<PlainWord>;

/// The star product on sentences, memoized across calls.
pub type SentenceEngine = Extension<PlainWord>;

impl Magma for PlainWord {
    fn magma(&self, other: &Self) -> Self {
        concat(self, other)
    }

    fn degree(&self) -> usize {
        self.len()
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", self.letters().iter().join("|"))
    }
}

/// Total number of letters.
pub fn sentence_degree(s: &Sentence) -> usize {
    s.letters().iter().map(Word::len).sum()
}

/// Parses `ab|c`; `1` is the empty sentence. Each character is one letter.
pub fn parse_sentence(src: &str, alphabet: Option<&Alphabet>) -> Result<Sentence> {
    let src = src.trim();
    if src == "1" {
        return Ok(Sentence::unit());
    }
    let mut words = Vec::new();
    for part in src.split('|') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::Parse(format!("empty word in `{src}`")));
        }
        let mut letters = Vec::new();
        for c in part.chars() {
            if !crate::symbol::is_symbol_char(c) {
                return Err(Error::Parse(format!("invalid letter `{c}` in `{src}`")));
            }
            let sym = Symbol::from(c);
            if let Some(a) = alphabet {
                a.check(&sym)?;
            }
            letters.push(sym);
        }
        words.push(Word(letters));
    }
    Ok(Word(words))
}

/// All words with exactly `n` letters over the alphabet.
pub fn enumerate_words(n: usize, alphabet: &Alphabet) -> Vec<PlainWord> {
    let mut out = vec![PlainWord::unit()];
    for _ in 0..n {
        out = out
            .iter()
            .flat_map(|w| alphabet.symbols().iter().map(move |s| w.push(s.clone())))
            .collect();
    }
    out.sort();
    out
}

/// All sentences with `n` letters in total (`n = 0` gives the unit).
pub fn enumerate_sentences(n: usize, alphabet: &Alphabet) -> Vec<Sentence> {
    let words: Vec<Vec<PlainWord>> = (0..=n).map(|k| enumerate_words(k, alphabet)).collect();
    let mut table: Vec<Vec<Sentence>> = vec![vec![Sentence::unit()]];
    for k in 1..=n {
        let mut level = Vec::new();
        for last in 1..=k {
            for prefix in &table[k - last] {
                for w in &words[last] {
                    level.push(prefix.push(w.clone()));
                }
            }
        }
        table.push(level);
    }
    let mut out = table.swap_remove(n);
    out.sort();
    out
}

/// The recursive star product, extended bilinearly.
pub fn star_sentence_recursive(x: &LinComb<Sentence>, y: &LinComb<Sentence>) -> LinComb<Sentence> {
    SentenceEngine::new().star(x, y)
}

/// `S * W = Σ_f (S₁W_{f⁻¹(1)})|…|(SₙW_{f⁻¹(n)})` over injections
/// `f: {1..k} ↪ {1..n}`, in lexicographic order of image tuples.
///
/// `W_∅` is the empty word; the sum is empty when `k > n`.
pub fn star_sentence_closed(s: &Sentence, w: &Sentence) -> LinComb<Sentence> {
    let (n, k) = (s.len(), w.len());
    let mut out = LinComb::zero();
    if k > n {
        return out;
    }
    for image in (0..n).permutations(k) {
        let mut parts = s.letters().to_vec();
        for (j, &i) in image.iter().enumerate() {
            parts[i] = concat(&parts[i], &w.letters()[j]);
        }
        out.add_term(Word(parts), Scalar::one());
    }
    out
}
