use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::trees::Forest;

use super::levelled::{graft_onto_levelled, word_to_levelled, WordNR};
use super::multiset::ForestMultiset;
use super::perm::{permutations, Permutation};
use super::{curvearrowleft, ForestElement};

/// `Φₙ(F)(σ)` for `n = l(F)`.
///
/// Each orbit `O` of `σ` (by increasing minimum) contributes one tree
/// `B(F_O, φ(τ))`, where `F_O` lists the trees at the positions of `O` in
/// increasing order and `τ` is the cycle word of `O` read from its minimum,
/// with the minimum dropped and letters replaced by their rank in `O`.
pub fn phi_n(f: &Forest, sigma: &Permutation) -> Result<Forest> {
    let n = f.len() as u32;
    if sigma.support_bound() > n {
        return Err(Error::Precondition(format!("{sigma} does not act on 1..={n}")));
    }
    let mut out = Vec::new();
    for cycle in sigma.orbits(n) {
        let mut members = cycle.clone();
        members.sort_unstable();
        let rank = |l: u32| members.binary_search(&l).expect("member of the orbit") as u32 + 1;
        let tau = WordNR::new(cycle[1..].iter().map(|&l| rank(l)).collect())?;
        let trees: Forest = members.iter().map(|&i| f.letters()[i as usize - 1].clone()).collect();
        out.push(graft_onto_levelled(&trees, &word_to_levelled(&tau))?);
    }
    Ok(Forest::from(out))
}

/// The multiset `{{Φₙ(F)(σ) : σ ∈ Sₙ}}`.
pub fn phi_n_image(f: &Forest) -> ForestMultiset {
    permutations(f.len() as u32)
        .iter()
        .map(|s| phi_n(f, s).expect("σ acts on 1..=n"))
        .collect()
}

/// `F * G = Σ_{σ ∈ S_k} (−1)^{O(σ)+k} F↶Φ_k(G)(σ)` with `k = l(G)` and
/// `O(σ)` the number of orbits.
pub fn star_closed_perm(f: &Forest, g: &Forest) -> ForestElement {
    let k = g.len() as u32;
    let mut out = LinComb::zero();
    for sigma in permutations(k) {
        let s = phi_n(g, &sigma).expect("σ acts on 1..=k");
        let sign = Scalar::sign_power(sigma.orbit_count(k) + k as usize);
        out.add_scaled(&sign, &curvearrowleft(f, &s));
    }
    out
}
