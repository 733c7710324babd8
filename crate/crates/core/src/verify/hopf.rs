//! Post-Hopf relations on basis triples, for any star product on `T(L)`.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extension::{tensor_star, Extension, StarProduct};
use crate::linear::LinComb;
use crate::scalar::Scalar;
use crate::symbol::Alphabet;
use crate::tensor::{concat, counit, coproduct, product, unshuffle, Word};
use crate::trees::{enumerate_forests, Tree};
use crate::words::{enumerate_sentences, PlainWord};

use super::{AxiomCheck, AxiomReport, Witness};

/// Which free algebra to run the suite on.
#[derive(Clone, Debug)]
pub enum Engine {
    Trees(Alphabet),
    Words(Alphabet),
}

/// Doubles every product whose right factor has exactly two letters.
pub struct FaultyStar<P> {
    pub inner: P,
}

impl<L: Ord + Clone, P: StarProduct<L>> StarProduct<L> for FaultyStar<P> {
    fn star_basis(&self, x: &Word<L>, y: &Word<L>) -> LinComb<Word<L>> {
        let r = self.inner.star_basis(x, y);
        if y.len() == 2 {
            r.scale(&Scalar::from(2i64))
        } else {
            r
        }
    }
}

/// Runs the full suite on the chosen engine over all basis elements of
/// total degree at most `budget`, the unit included.
pub fn hopf_relation_suite(engine: &Engine, budget: usize) -> Result<AxiomReport> {
    if budget < 2 {
        return Err(Error::Precondition("the Hopf suite needs a budget of at least 2".into()));
    }
    Ok(match engine {
        Engine::Trees(alphabet) => {
            let basis: Vec<_> = (0..=budget).map(|d| enumerate_forests(d, alphabet)).collect();
            let subject = format!("free trees over {{{}}}, degree <= {budget}", join(alphabet));
            hopf_suite_on(&Extension::<Tree>::new(), &basis, subject)
        }
        Engine::Words(alphabet) => {
            let basis: Vec<_> = (0..=budget).map(|d| enumerate_sentences(d, alphabet)).collect();
            let subject = format!("free words over {{{}}}, degree <= {budget}", join(alphabet));
            hopf_suite_on(&Extension::<PlainWord>::new(), &basis, subject)
        }
    })
}

fn join(a: &Alphabet) -> String {
    a.symbols().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

type Combo<L> = LinComb<Word<L>>;

/// The suite on an explicit basis, `basis[d]` listing the elements of
/// degree `d`; the budget is `basis.len() − 1`.
pub fn hopf_suite_on<L, P>(star: &P, basis: &[Vec<Word<L>>], subject: impl Into<String>) -> AxiomReport
where
    L: Ord + Clone + Send + Sync,
    Word<L>: fmt::Display,
    P: StarProduct<L> + ?Sized,
{
    let budget = basis.len().saturating_sub(1);
    let singles: Vec<&Word<L>> = basis.iter().flatten().collect();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for (a, xs) in basis.iter().enumerate() {
        for (b, ys) in basis.iter().enumerate().take(budget + 1 - a) {
            for x in xs {
                for y in ys {
                    pairs.push((x, y));
                }
            }
            for zs in basis.iter().take(budget + 1 - a - b) {
                for x in xs {
                    for y in ys {
                        for z in zs {
                            triples.push((x, y, z));
                        }
                    }
                }
            }
        }
    }

    let one = Word::<L>::unit();
    let lc = |w: &Word<L>| Combo::<L>::from_term(w.clone());
    let name = |ws: &[&Word<L>]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>();
    let witness = |inputs: Vec<String>, r: &Combo<L>| (!r.is_zero()).then(|| Witness::new(inputs, r));

    let mut report = AxiomReport::new(subject);

    report.push(AxiomCheck::from_cases(
        "x*1 = x",
        singles.par_iter().map(|x| witness(name(&[x]), &(&star.star_basis(x, &one) - &lc(x)))).collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "1*x = eps(x)1",
        singles
            .par_iter()
            .map(|x| {
                let eps = if x.is_empty() { Scalar::one() } else { Scalar::zero() };
                witness(name(&[x]), &(&star.star_basis(&one, x) - &Combo::<L>::from_scaled(eps, one.clone())))
            })
            .collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "Delta(x*y) = Delta(x)*Delta(y)",
        pairs
            .par_iter()
            .map(|&(x, y)| {
                let lhs = coproduct(&star.star_basis(x, y));
                let rhs = tensor_star(star, &unshuffle(x), &unshuffle(y));
                let r = &lhs - &rhs;
                (!r.is_zero()).then(|| Witness::new(name(&[x, y]), &r))
            })
            .collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "eps(x*y) = eps(x)eps(y)",
        pairs
            .par_iter()
            .map(|&(x, y)| {
                let want = if x.is_empty() && y.is_empty() { Scalar::one() } else { Scalar::zero() };
                let diff = counit(&star.star_basis(x, y)) - want;
                witness(name(&[x, y]), &Combo::<L>::from_scaled(diff, one.clone()))
            })
            .collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "(x.y)*z = (x*z1).(y*z2)",
        triples
            .par_iter()
            .map(|&(x, y, z)| {
                let lhs = star.star_basis(&concat(x, y), z);
                let mut rhs = Combo::<L>::zero();
                for (p, c) in unshuffle(z).iter() {
                    rhs.add_scaled(c, &product(&star.star_basis(x, &p.left), &star.star_basis(y, &p.right)));
                }
                witness(name(&[x, y, z]), &(&lhs - &rhs))
            })
            .collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "(x*y)*z = x*((y*z1).z2)",
        triples
            .par_iter()
            .map(|&(x, y, z)| {
                let lhs = star.star(&star.star_basis(x, y), &lc(z));
                let mut inner = Combo::<L>::zero();
                for (p, c) in unshuffle(z).iter() {
                    inner.add_scaled(c, &product(&star.star_basis(y, &p.left), &lc(&p.right)));
                }
                let rhs = star.star(&lc(x), &inner);
                witness(name(&[x, y, z]), &(&lhs - &rhs))
            })
            .collect(),
    ));
    // Opposed structure: x<y := y*x and y.'z := z.y.
    report.push(AxiomCheck::from_cases(
        "opposed: x<(y.'z) = (x1<y).'(x2<z)",
        triples
            .par_iter()
            .map(|&(x, y, z)| {
                let lhs = star.star_basis(&concat(z, y), x);
                let mut rhs = Combo::<L>::zero();
                for (p, c) in unshuffle(x).iter() {
                    rhs.add_scaled(c, &product(&star.star_basis(z, &p.right), &star.star_basis(y, &p.left)));
                }
                witness(name(&[x, y, z]), &(&lhs - &rhs))
            })
            .collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "opposed: x<(y<z) = (x1.'(x2<y))<z",
        triples
            .par_iter()
            .map(|&(x, y, z)| {
                let lhs = star.star(&star.star_basis(z, y), &lc(x));
                let mut inner = Combo::<L>::zero();
                for (p, c) in unshuffle(x).iter() {
                    inner.add_scaled(c, &product(&star.star_basis(y, &p.right), &lc(&p.left)));
                }
                let rhs = star.star(&lc(z), &inner);
                witness(name(&[x, y, z]), &(&lhs - &rhs))
            })
            .collect(),
    ));
    report
}
