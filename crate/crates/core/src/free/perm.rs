use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::parse::Cursor;

use super::levelled::WordNR;

/// A permutation of the positive integers with finite support.
///
/// Stored as the image array on `{1,…,n}` with trailing fixed points
/// dropped, so equal permutations compare equal whatever `n` was used.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// From the one-line notation `σ(1), …, σ(n)`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let distinct: BTreeSet<u32> = images.iter().copied().collect();
        if distinct.len() != images.len() || images.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::Precondition(format!("{images:?} is not a permutation of 1..={n}")));
        }
        let mut images = images;
        while images.last().is_some_and(|&v| v as usize == images.len()) {
            images.pop();
        }
        Ok(Permutation { images })
    }

    /// From disjoint cycles, each sending every letter to the next one.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &l in cycles.iter().flatten() {
            if l == 0 {
                return Err(Error::Precondition("letters must be positive".into()));
            }
            if !seen.insert(l) {
                return Err(Error::Precondition(format!("letter {l} appears twice")));
            }
        }
        let n = seen.last().copied().unwrap_or(0);
        let mut images: Vec<u32> = (1..=n).collect();
        for c in cycles {
            for (i, &l) in c.iter().enumerate() {
                images[l as usize - 1] = c[(i + 1) % c.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn apply(&self, i: u32) -> u32 {
        match self.images.get((i as usize).wrapping_sub(1)) {
            Some(&v) => v,
            None => i,
        }
    }

    /// The largest moved point, `0` for the identity.
    pub fn support_bound(&self) -> u32 {
        self.images.len() as u32
    }

    /// One-line notation on `{1,…,n}`; `n` must bound the support.
    pub fn images(&self, n: u32) -> Vec<u32> {
        (1..=n).map(|i| self.apply(i)).collect()
    }

    /// Orbits on `{1,…,n}` as cycle words written from their minimum,
    /// sorted by minimum (fixed points included).
    pub fn orbits(&self, n: u32) -> Vec<Vec<u32>> {
        let mut seen = vec![false; n as usize + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next as usize] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            out.push(cycle);
        }
        out
    }

    /// Number of orbits on `{1,…,n}`.
    pub fn orbit_count(&self, n: u32) -> usize {
        self.orbits(n).len()
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<u32>> = self.orbits(self.support_bound()).into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation `(1 2)(3)` (or `()`), or one-line notation `[2,1,3]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let perm = if cur.eat('[') {
            let mut images = Vec::new();
            if !cur.eat(']') {
                loop {
                    images.push(cur.number()?);
                    if cur.eat(']') {
                        break;
                    }
                    cur.expect(',')?;
                }
            }
            Permutation::from_images(images)?
        } else {
            let mut cycles = Vec::new();
            while cur.eat('(') {
                let mut c = Vec::new();
                while !cur.eat(')') {
                    c.push(cur.number()?);
                    cur.eat(',');
                }
                cycles.push(c);
            }
            if cycles.is_empty() {
                return Err(cur.error("expected `(` or `[`"));
            }
            Permutation::from_cycles(&cycles)?
        };
        cur.finish()?;
        Ok(perm)
    }
}

/// All permutations of `{1,…,n}` in lexicographic order of one-line notation.
pub fn permutations(n: u32) -> Vec<Permutation> {
    (1..=n)
        .permutations(n as usize)
        .map(|p| Permutation::from_images(p).expect("a permutation"))
        .collect()
}

/// A sentence of words with no letter repeated anywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PackedSentence(Vec<WordNR>);

impl PackedSentence {
    pub fn new(words: Vec<WordNR>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &l in words.iter().flat_map(|w| w.letters()) {
            if !seen.insert(l) {
                return Err(Error::Precondition(format!("letter {l} repeated across the sentence")));
            }
        }
        Ok(PackedSentence(words))
    }

    pub fn words(&self) -> &[WordNR] {
        &self.0
    }

    /// Whether the letters are exactly `{1,…,m}`.
    pub fn is_packed(&self) -> bool {
        let letters: BTreeSet<u32> = self.0.iter().flat_map(|w| w.letters().iter().copied()).collect();
        letters.iter().copied().eq(1..=letters.len() as u32)
    }
}

/// Words joined by `|`; the empty sentence prints as `0`.
impl fmt::Display for PackedSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", self.0.iter().join("|"))
    }
}

impl fmt::Debug for PackedSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PackedSentence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(PackedSentence::default());
        }
        let words = s
            .split('|')
            .map(|w| {
                let w: WordNR = w.parse()?;
                if w.is_empty() {
                    Err(Error::Parse(format!("empty word in `{s}`")))
                } else {
                    Ok(w)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        PackedSentence::new(words)
    }
}

/// `s(σ)`: nontrivial cycles from their minimum, sorted by minimum.
pub fn normal_form(sigma: &Permutation) -> PackedSentence {
    let words = sigma
        .orbits(sigma.support_bound())
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| WordNR::new(c).expect("orbits are disjoint"))
        .collect();
    PackedSentence(words)
}

/// `β`: each word `w₁…wₘ` becomes the cycle `w₁ ↦ w₂ ↦ … ↦ wₘ ↦ w₁`.
pub fn sentence_to_perm(s: &PackedSentence) -> Permutation {
    let cycles: Vec<Vec<u32>> = s.0.iter().map(|w| w.letters().to_vec()).collect();
    Permutation::from_cycles(&cycles).expect("letters are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_example() {
        let sigma = sentence_to_perm(&"1256".parse().unwrap());
        assert_eq!(sigma.images(6), vec![2, 5, 3, 4, 6, 1]);
        assert_eq!(sigma.apply(7), 7);
    }

    #[test]
    fn normal_forms() {
        assert_eq!(normal_form(&Permutation::identity()).to_string(), "0");
        let sigma: Permutation = "(3 6 4)(1 5)".parse().unwrap();
        assert_eq!(normal_form(&sigma).to_string(), "15|364");
        assert_eq!(sentence_to_perm(&normal_form(&sigma)), sigma);
        let rotated: PackedSentence = "436|51".parse().unwrap();
        assert_eq!(sentence_to_perm(&rotated), sigma);
        assert_ne!(normal_form(&sentence_to_perm(&rotated)), rotated);
    }

    #[test]
    fn parsing_and_counts() {
        let a: Permutation = "[2,1,3]".parse().unwrap();
        let b: Permutation = "(1 2)(3)".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1 2)");
        assert_eq!("()".parse::<Permutation>().unwrap(), Permutation::identity());
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("(1 2)(2 3)".parse::<Permutation>().is_err());
        assert!("12|2".parse::<PackedSentence>().is_err());
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(a.orbit_count(3), 2);
        assert!("12|3".parse::<PackedSentence>().unwrap().is_packed());
        assert!(!"13".parse::<PackedSentence>().unwrap().is_packed());
    }
}
