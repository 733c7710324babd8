use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parse::Cursor;
use crate::trees::{vee, Forest, Tree};

/// A binary planar tree with distinct positive node labels increasing away
/// from the root. `|` is the leaf.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LevelledTree {
    Leaf,
    Node(u32, Box<LevelledTree>, Box<LevelledTree>),
}

impl LevelledTree {
    /// Builds a node, checking that `label` is below every label beneath it
    /// and that labels stay distinct.
    pub fn node(label: u32, left: LevelledTree, right: LevelledTree) -> Result<LevelledTree> {
        let t = LevelledTree::Node(label, Box::new(left), Box::new(right));
        t.validate()?;
        Ok(t)
    }

    pub fn labels(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<u32>) {
        if let LevelledTree::Node(k, l, r) = self {
            out.insert(*k);
            l.collect(out);
            r.collect(out);
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            LevelledTree::Leaf => 0,
            LevelledTree::Node(_, l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.labels().len() != self.node_count() {
            return Err(Error::Precondition(format!("repeated label in {self}")));
        }
        self.check_levels(0)
    }

    fn check_levels(&self, above: u32) -> Result<()> {
        match self {
            LevelledTree::Leaf => Ok(()),
            LevelledTree::Node(k, l, r) => {
                if *k == 0 {
                    return Err(Error::Precondition("labels must be positive".into()));
                }
                if *k <= above {
                    return Err(Error::Precondition(format!("label {k} is not above its parent {above}")));
                }
                l.check_levels(*k)?;
                r.check_levels(*k)
            }
        }
    }
}

impl fmt::Display for LevelledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelledTree::Leaf => write!(f, "|"),
            LevelledTree::Node(k, l, r) => write!(f, "N{k}({l},{r})"),
        }
    }
}

impl fmt::Debug for LevelledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LevelledTree {
    type Err = Error;

    /// Parses `|` or `Nk(L,R)` and validates the labelling.
    fn from_str(s: &str) -> Result<LevelledTree> {
        let mut cur = Cursor::new(s);
        let t = parse_levelled(&mut cur)?;
        cur.finish()?;
        t.validate()?;
        Ok(t)
    }
}

fn parse_levelled(cur: &mut Cursor<'_>) -> Result<LevelledTree> {
    if cur.eat('|') {
        return Ok(LevelledTree::Leaf);
    }
    cur.expect('N')?;
    let k = cur.number()?;
    cur.expect('(')?;
    let l = parse_levelled(cur)?;
    cur.expect(',')?;
    let r = parse_levelled(cur)?;
    cur.expect(')')?;
    Ok(LevelledTree::Node(k, Box::new(l), Box::new(r)))
}

/// A word of distinct positive integers; the empty word prints as `0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WordNR(Vec<u32>);

impl WordNR {
    pub fn new(letters: Vec<u32>) -> Result<WordNR> {
        let mut seen = BTreeSet::new();
        for &l in &letters {
            if l == 0 {
                return Err(Error::Precondition("letters must be positive".into()));
            }
            if !seen.insert(l) {
                return Err(Error::Precondition(format!("letter {l} repeated")));
            }
        }
        Ok(WordNR(letters))
    }

    pub fn empty() -> WordNR {
        WordNR(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Letters are concatenated when all are single digits, comma-separated
/// otherwise.
impl fmt::Display for WordNR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let sep = if self.0.iter().all(|&l| l < 10) { "" } else { "," };
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl fmt::Debug for WordNR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for WordNR {
    type Err = Error;

    /// `0` is the empty word; `12453` reads digit by digit; `1,12,3` reads
    /// comma-separated numbers.
    fn from_str(s: &str) -> Result<WordNR> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(WordNR::empty());
        }
        let letters: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad letter `{p}` in `{s}`"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad letter `{c}` in `{s}`"))))
                .collect::<Result<_>>()?
        };
        WordNR::new(letters)
    }
}

/// `φ(0) = |` and `φ(w′·m·w″) = φ(w′) ∨ₘ φ(w″)` with `m = min w`.
pub fn word_to_levelled(w: &WordNR) -> LevelledTree {
    to_levelled(w.letters())
}

fn to_levelled(w: &[u32]) -> LevelledTree {
    let Some((pos, &m)) = w.iter().enumerate().min_by_key(|&(_, l)| *l) else {
        return LevelledTree::Leaf;
    };
    LevelledTree::Node(m, Box::new(to_levelled(&w[..pos])), Box::new(to_levelled(&w[pos + 1..])))
}

/// `B(F, T)`: `T₁` goes to the leftmost leaf of `T`, and `Tᵢ` to the leftmost
/// leaf of the right subtree of the node labelled `i`.
///
/// The labels of `T` must be exactly `{2,…,l(F)}`.
pub fn graft_onto_levelled(f: &Forest, t: &LevelledTree) -> Result<Tree> {
    let n = f.len() as u32;
    if n == 0 {
        return Err(Error::Precondition("B needs a nonempty forest".into()));
    }
    let want: BTreeSet<u32> = (2..=n).collect();
    if t.labels() != want || t.node_count() + 1 != f.len() {
        return Err(Error::Precondition(format!("labels of {t} must be exactly 2..={n}")));
    }
    Ok(build(f.letters(), t, &f.letters()[0]))
}

fn build(trees: &[Tree], t: &LevelledTree, leftmost: &Tree) -> Tree {
    match t {
        LevelledTree::Leaf => leftmost.clone(),
        LevelledTree::Node(i, l, r) => vee(&build(trees, l, leftmost), &build(trees, r, &trees[*i as usize - 1])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_forest;

    fn lt(s: &str) -> LevelledTree {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(word_to_levelled(&WordNR::empty()), LevelledTree::Leaf);
        assert_eq!(word_to_levelled(&"2".parse().unwrap()), lt("N2(|,|)"));
        assert_eq!(
            word_to_levelled(&"12453".parse().unwrap()).to_string(),
            "N1(|,N2(|,N3(N4(|,N5(|,|)),|)))"
        );
    }

    #[test]
    fn levelled_validation() {
        assert!("N2(N1(|,|),|)".parse::<LevelledTree>().is_err());
        assert!("N2(N2(|,|),|)".parse::<LevelledTree>().is_err());
        assert!("N2(|,|".parse::<LevelledTree>().is_err());
        assert!("12a".parse::<WordNR>().is_err());
        assert!("121".parse::<WordNR>().is_err());
        assert_eq!("1,12,3".parse::<WordNR>().unwrap().to_string(), "1,12,3");
    }

    #[test]
    fn b_examples() {
        let f3 = parse_forest("[t1 t2 t3]", None).unwrap();
        let one = parse_forest("[t1]", None).unwrap();
        assert_eq!(graft_onto_levelled(&one, &lt("|")).unwrap().to_string(), "t1");
        let two = parse_forest("[t1 t2]", None).unwrap();
        assert_eq!(graft_onto_levelled(&two, &lt("N2(|,|)")).unwrap().to_string(), "(t1^t2)");
        assert_eq!(graft_onto_levelled(&f3, &lt("N2(|,N3(|,|))")).unwrap().to_string(), "(t1^(t2^t3))");
        assert_eq!(graft_onto_levelled(&f3, &lt("N2(N3(|,|),|)")).unwrap().to_string(), "((t1^t3)^t2)");
        assert!(graft_onto_levelled(&f3, &lt("N2(|,|)")).is_err());
        assert!(graft_onto_levelled(&f3, &lt("N1(|,N3(|,|))")).is_err());
    }
}
