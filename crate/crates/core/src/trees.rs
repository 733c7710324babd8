//! Decorated planar binary trees, forests, planar rooted trees, the grafting
//! and Butcher products, and the rightmost-edge contraction.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::parse::Cursor;
use crate::symbol::{Alphabet, Symbol};
use crate::tensor::Word;

/// A planar binary tree with decorated leaves, i.e. an element of `Mag(X)`.
///
/// Ordered with leaves before internal nodes; leaves compare by decoration,
/// internal nodes by their right subtree and then their left subtree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(Symbol),
    Vee(Arc<Tree>, Arc<Tree>),
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Leaf(a), Tree::Leaf(b)) => a.cmp(b),
            (Tree::Leaf(_), Tree::Vee(..)) => Ordering::Less,
            (Tree::Vee(..), Tree::Leaf(_)) => Ordering::Greater,
            (Tree::Vee(l1, r1), Tree::Vee(l2, r2)) => r1.cmp(r2).then_with(|| l1.cmp(l2)),
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered sequence of trees; the empty forest is the unit.
pub type Forest = Word<Tree>;

impl Tree {
    pub fn leaf(s: impl Into<Symbol>) -> Tree {
        Tree::Leaf(s.into())
    }

    pub fn bullet() -> Tree {
        Tree::Leaf(Symbol::bullet())
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Vee(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf(_))
    }

    /// Leaf decorations from left to right.
    pub fn decorations(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        self.collect_decorations(&mut out);
        out
    }

    fn collect_decorations(&self, out: &mut Vec<Symbol>) {
        match self {
            Tree::Leaf(s) => out.push(s.clone()),
            Tree::Vee(l, r) => {
                l.collect_decorations(out);
                r.collect_decorations(out);
            }
        }
    }

    pub fn parse_with(src: &str, alphabet: Option<&Alphabet>) -> Result<Tree> {
        let mut cur = Cursor::new(src);
        let t = parse_tree(&mut cur, alphabet)?;
        cur.finish()?;
        Ok(t)
    }
}

/// `t1 ∨ t2`: a new root with `t1` on the left and `t2` on the right.
pub fn vee(t1: &Tree, t2: &Tree) -> Tree {
    Tree::Vee(Arc::new(t1.clone()), Arc::new(t2.clone()))
}

pub fn forest_degree(f: &Forest) -> usize {
    f.0.iter().map(Tree::degree).sum()
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(s) => write!(f, "{s}"),
            Tree::Vee(l, r) => write!(f, "({l}^{r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Forests print as `[t1 t2 …]`, the empty forest as `1`.
impl fmt::Display for Word<Tree> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write!(f, "[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Tree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tree> {
        Tree::parse_with(s, None)
    }
}

fn parse_tree(cur: &mut Cursor<'_>, alphabet: Option<&Alphabet>) -> Result<Tree> {
    if cur.eat('(') {
        let l = parse_tree(cur, alphabet)?;
        cur.expect('^')?;
        let r = parse_tree(cur, alphabet)?;
        cur.expect(')')?;
        return Ok(vee(&l, &r));
    }
    let name = cur.ident()?;
    let sym = Symbol::new(name);
    if let Some(a) = alphabet {
        a.check(&sym)?;
    }
    Ok(Tree::Leaf(sym))
}

/// Parses `[t1 t2 …]`, `[]` or `1` (empty), or a bare tree (a one-tree forest).
pub fn parse_forest(src: &str, alphabet: Option<&Alphabet>) -> Result<Forest> {
    let mut cur = Cursor::new(src);
    let forest = if cur.eat('[') {
        let mut trees = Vec::new();
        while !cur.eat(']') {
            if cur.peek().is_none() {
                return Err(cur.error("unterminated forest"));
            }
            trees.push(parse_tree(&mut cur, alphabet)?);
        }
        Word(trees)
    } else if src.trim() == "1" {
        cur.bump();
        Word::unit()
    } else {
        Word(vec![parse_tree(&mut cur, alphabet)?])
    };
    cur.finish()?;
    Ok(forest)
}

/// All trees with exactly `n` leaves, each leaf decorated by any symbol of
/// the alphabet, in canonical order.
pub fn enumerate_pbtrees(n: usize, alphabet: &Alphabet) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::Precondition("a tree has at least one leaf".into()));
    }
    let mut table: Vec<Vec<Tree>> = vec![Vec::new(), alphabet.symbols().iter().cloned().map(Tree::Leaf).collect()];
    for k in 2..=n {
        let mut level = Vec::new();
        for left in 1..k {
            for l in &table[left] {
                for r in &table[k - left] {
                    level.push(vee(l, r));
                }
            }
        }
        table.push(level);
    }
    let mut out = table.swap_remove(n);
    out.sort();
    Ok(out)
}

/// All forests of total degree `n` over the alphabet (`n = 0` gives the unit).
pub fn enumerate_forests(n: usize, alphabet: &Alphabet) -> Vec<Forest> {
    let trees: Vec<Vec<Tree>> = (0..=n)
        .map(|k| if k == 0 { Vec::new() } else { enumerate_pbtrees(k, alphabet).expect("k ≥ 1") })
        .collect();
    let mut table: Vec<Vec<Forest>> = vec![vec![Word::unit()]];
    for k in 1..=n {
        let mut level = Vec::new();
        // The last tree has degree `last`, the prefix carries the rest.
        for last in 1..=k {
            for prefix in &table[k - last] {
                for t in &trees[last] {
                    level.push(prefix.push(t.clone()));
                }
            }
        }
        table.push(level);
    }
    let mut out = table.swap_remove(n);
    out.sort();
    out
}

/// A planar rooted (non-binary) tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PRTree {
    pub children: Vec<PRTree>,
}

impl PRTree {
    pub fn node() -> PRTree {
        PRTree { children: Vec::new() }
    }

    pub fn with_children(children: Vec<PRTree>) -> PRTree {
        PRTree { children }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PRTree::node_count).sum::<usize>()
    }

    /// A chain of `n ≥ 1` nodes.
    pub fn chain(n: usize) -> PRTree {
        assert!(n >= 1);
        let mut t = PRTree::node();
        for _ in 1..n {
            t = PRTree::with_children(vec![t]);
        }
        t
    }
}

impl fmt::Display for PRTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "•")?;
        if !self.children.is_empty() {
            write!(f, "(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PRTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_prtree(cur: &mut Cursor<'_>) -> Result<PRTree> {
    match cur.bump() {
        Some('•') | Some('o') | Some('*') => {}
        _ => return Err(cur.error("expected a node `•`")),
    }
    let mut children = Vec::new();
    if cur.eat('(') {
        while !cur.eat(')') {
            if cur.peek().is_none() {
                return Err(cur.error("unterminated child list"));
            }
            children.push(parse_prtree(cur)?);
        }
        if children.is_empty() {
            return Err(cur.error("empty child list"));
        }
    }
    Ok(PRTree { children })
}

/// Nodes may be written `•`, `o` or `*`.
impl FromStr for PRTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<PRTree> {
        let mut cur = Cursor::new(s);
        let t = parse_prtree(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}

/// All planar rooted trees with `n ≥ 1` nodes, in canonical order.
pub fn enumerate_prtrees(n: usize) -> Vec<PRTree> {
    assert!(n >= 1);
    // forests[k]: ordered forests with k nodes in total.
    let mut trees: Vec<Vec<PRTree>> = vec![Vec::new()];
    let mut forests: Vec<Vec<Vec<PRTree>>> = vec![vec![Vec::new()]];
    for k in 1..=n {
        let level: Vec<PRTree> = forests[k - 1].iter().map(|f| PRTree::with_children(f.clone())).collect();
        trees.push(level);
        let mut fk = Vec::new();
        for first in 1..=k {
            for t in &trees[first] {
                for rest in &forests[k - first] {
                    let mut f = vec![t.clone()];
                    f.extend(rest.iter().cloned());
                    fk.push(f);
                }
            }
        }
        forests.push(fk);
    }
    let mut out = trees.swap_remove(n);
    out.sort();
    out
}

/// `τ1 ⋆ τ2`: the root of `τ1` becomes the new leftmost child of the root of `τ2`.
pub fn butcher(t1: &PRTree, t2: &PRTree) -> PRTree {
    let mut children = Vec::with_capacity(t2.children.len() + 1);
    children.push(t1.clone());
    children.extend(t2.children.iter().cloned());
    PRTree { children }
}

/// Contracts the rightmost outgoing edge of every internal node. Decorations
/// are forgotten: the bijection is the one-generator case.
pub fn contract_rightmost(t: &Tree) -> PRTree {
    match t {
        Tree::Leaf(_) => PRTree::node(),
        Tree::Vee(l, r) => butcher(&contract_rightmost(l), &contract_rightmost(r)),
    }
}

/// Inverse of [`contract_rightmost`] with every leaf decorated by `symbol`.
pub fn expand_leftmost_with(t: &PRTree, symbol: &Symbol) -> Tree {
    match t.children.split_first() {
        None => Tree::Leaf(symbol.clone()),
        Some((first, rest)) => {
            let remainder = PRTree::with_children(rest.to_vec());
            vee(&expand_leftmost_with(first, symbol), &expand_leftmost_with(&remainder, symbol))
        }
    }
}

/// Inverse of [`contract_rightmost`]. Only defined for a one-symbol alphabet.
pub fn expand_leftmost(t: &PRTree, alphabet: &Alphabet) -> Result<Tree> {
    match alphabet.symbols() {
        [s] => Ok(expand_leftmost_with(t, s)),
        _ => Err(Error::Precondition(
            "expansion of planar rooted trees needs a single-symbol alphabet".into(),
        )),
    }
}

/// `τ1 ◁ τ2`: the sum, over all nodes `v` of `τ1`, of `τ1` with `τ2` grafted
/// as the new leftmost child of `v`.
pub fn left_graft_sum(t1: &PRTree, t2: &PRTree) -> LinComb<PRTree> {
    let mut out = LinComb::zero();
    let n = t1.node_count();
    for target in 0..n {
        let mut counter = 0;
        out.add_term(graft_at(t1, t2, target, &mut counter), crate::Scalar::one());
    }
    out
}

/// Grafts `t2` at the node of preorder index `target`.
fn graft_at(t: &PRTree, t2: &PRTree, target: usize, counter: &mut usize) -> PRTree {
    let here = *counter;
    *counter += 1;
    let mut children: Vec<PRTree> = t.children.iter().map(|c| graft_at(c, t2, target, counter)).collect();
    if here == target {
        children.insert(0, t2.clone());
    }
    PRTree { children }
}

impl crate::extension::Magma for Tree {
    fn magma(&self, other: &Tree) -> Tree {
        vee(self, other)
    }

    fn degree(&self) -> usize {
        Tree::degree(self)
    }
}
