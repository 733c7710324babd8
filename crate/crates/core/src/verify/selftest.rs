//! Every invariant of the crate, run to a degree budget.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extension::StarProduct;
use crate::free::{forest_multiset, phi_n_image, star_closed_multiset, star_closed_perm, ForestEngine};
use crate::linear::LinComb;
use crate::random::{random_forest, random_sentence, seeded, shuffled};
use crate::scalar::Scalar;
use crate::symbol::Alphabet;
use crate::trees::{
    butcher, contract_rightmost, enumerate_forests, enumerate_pbtrees, enumerate_prtrees, expand_leftmost_with, vee, Forest,
    Tree,
};
use crate::words::{enumerate_sentences, star_sentence_closed, Sentence, SentenceEngine};

use super::{
    check_left_postlie, check_right_postlie, convolution_inverse, decorated_tree_counts, hopf_relation_suite,
    left_graft_fixture, opposite, pbw_dims, primitive_kernel, symmetrization_check, trivial_fixture,
    truncated_tree_fixture, truncated_word_fixture, AxiomCheck, AxiomReport, Engine, FinPostLie, Witness,
    CONVOLUTION_MAX_BUDGET, PRIMITIVE_MAX_DEGREE,
};

/// Largest budget accepted by [`selftest`].
pub const SELFTEST_MAX_BUDGET: usize = 6;

/// Random cases drawn per randomized check.
const RANDOM_CASES: usize = 100;

fn letters(list: &str) -> Alphabet {
    Alphabet::parse_list(list).expect("valid alphabet")
}

fn count_witness(input: String, got: usize, want: usize) -> Option<Witness> {
    (got != want).then(|| {
        let diff = Scalar::from(got as i64) - Scalar::from(want as i64);
        Witness::new(vec![input], &LinComb::from_scaled(diff, "count".to_string()))
    })
}

fn all_trees(max_degree: usize, alphabet: &Alphabet) -> Vec<Tree> {
    (1..=max_degree)
        .flat_map(|d| enumerate_pbtrees(d, alphabet).expect("alphabet is nonempty"))
        .collect()
}

/// Runs every family of checks on inputs of degree at most `budget`;
/// `seed` drives the randomized cases.
pub fn selftest(budget: usize, seed: u64) -> Result<Vec<AxiomReport>> {
    if !(2..=SELFTEST_MAX_BUDGET).contains(&budget) {
        return Err(Error::Precondition(format!("selftest budget must lie in 2..={SELFTEST_MAX_BUDGET}")));
    }
    let mut reports = vec![forest_report(budget, seed), sentence_report(budget, seed)];
    reports.push(hopf_relation_suite(&Engine::Trees(Alphabet::bullet()), budget)?);
    reports.push(hopf_relation_suite(&Engine::Words(letters("a,b")), budget.min(5))?);
    reports.extend(postlie_reports(budget)?);
    reports.push(convolution_inverse(budget.min(CONVOLUTION_MAX_BUDGET))?.report);
    reports.push(primitive_report(budget.min(PRIMITIVE_MAX_DEGREE))?);
    for n in 1..=4 {
        reports.push(symmetrization_check(n)?);
    }
    Ok(reports)
}

fn forest_report(budget: usize, seed: u64) -> AxiomReport {
    let bullet = Alphabet::bullet();
    let engine = ForestEngine::new();
    let forests: Vec<Vec<Forest>> = (0..=budget).map(|d| enumerate_forests(d, &bullet)).collect();
    let mut pairs: Vec<(Forest, Forest)> = Vec::new();
    for (a, fs) in forests.iter().enumerate() {
        for gs in forests.iter().take(budget + 1 - a) {
            for f in fs {
                pairs.extend(gs.iter().filter(|g| g.len() <= 4).map(|g| (f.clone(), g.clone())));
            }
        }
    }
    let mut rng = seeded(seed);
    let abc = letters("a,b,c");
    for _ in 0..RANDOM_CASES {
        let df = rng_range(&mut rng, 1, budget);
        let dg = rng_range(&mut rng, 1, budget + 1 - df);
        let f = random_forest(&mut rng, df, &abc);
        let g = random_forest(&mut rng, dg, &abc);
        pairs.push((f, g));
    }

    let mut report = AxiomReport::new(format!("star product on forests, degree <= {budget}"));
    report.push(AxiomCheck::from_cases(
        "recursion = multiset formula = permutation formula",
        pairs
            .par_iter()
            .map(|(f, g)| {
                let rec = engine.star_basis(f, g);
                let multi = star_closed_multiset(f, g);
                let perm = star_closed_perm(f, g);
                let inputs = vec![f.to_string(), g.to_string()];
                if rec != multi {
                    Some(Witness::new(inputs, &(&rec - &multi)))
                } else {
                    (rec != perm).then(|| Witness::new(inputs, &(&rec - &perm)))
                }
            })
            .collect(),
    ));
    let singles: Vec<&Forest> = forests.iter().flatten().filter(|f| f.len() <= 6).collect();
    report.push(AxiomCheck::from_cases(
        "multiset size = l(F)!",
        singles
            .par_iter()
            .map(|f| count_witness(f.to_string(), forest_multiset(f).cardinality(), (1..=f.len()).product()))
            .collect(),
    ));
    report.push(AxiomCheck::from_cases(
        "image over all permutations = multiset",
        singles
            .par_iter()
            .filter(|f| f.len() <= 5)
            .map(|f| {
                let (image, multi) = (phi_n_image(f), forest_multiset(f));
                (image != multi).then(|| {
                    let diff: LinComb<Forest> = image
                        .iter()
                        .map(|(h, k)| (h.clone(), Scalar::from(k as i64)))
                        .chain(multi.iter().map(|(h, k)| (h.clone(), -Scalar::from(k as i64))))
                        .collect();
                    Witness::new(vec![f.to_string()], &diff)
                })
            })
            .collect(),
    ));

    let trees = all_trees(budget, &bullet);
    let mut morphism = Vec::new();
    for t1 in &trees {
        for t2 in trees.iter().filter(|t2| t1.degree() + t2.degree() <= budget) {
            let lhs = contract_rightmost(&vee(t1, t2));
            let rhs = butcher(&contract_rightmost(t1), &contract_rightmost(t2));
            morphism.push((lhs != rhs).then(|| {
                let r = LinComb::from_terms([(lhs, Scalar::one()), (rhs, -Scalar::one())]);
                Witness::new(vec![t1.to_string(), t2.to_string()], &r)
            }));
        }
    }
    report.push(AxiomCheck::from_cases("contract(t1 v t2) = contract(t1) o contract(t2)", morphism));
    let dot = crate::symbol::Symbol::bullet();
    let mut round_trip: Vec<Option<Witness>> = trees
        .iter()
        .map(|t| {
            let back = expand_leftmost_with(&contract_rightmost(t), &dot);
            (&back != t).then(|| {
                let r = LinComb::from_terms([(back, Scalar::one()), (t.clone(), -Scalar::one())]);
                Witness::new(vec![t.to_string()], &r)
            })
        })
        .collect();
    for n in 1..=budget {
        let images: BTreeSet<_> = enumerate_pbtrees(n, &bullet)
            .expect("alphabet is nonempty")
            .iter()
            .map(contract_rightmost)
            .collect();
        let all: BTreeSet<_> = enumerate_prtrees(n).into_iter().collect();
        round_trip.push(count_witness(format!("{n} leaves"), images.len(), all.len()));
        round_trip.push(count_witness(format!("{n} leaves"), all.len(), decorated_tree_counts(n, 1)[n - 1] as usize));
    }
    report.push(AxiomCheck::from_cases("contraction is a bijection with inverse expand", round_trip));
    report
}

fn rng_range<R: rand::Rng>(rng: &mut R, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi.max(lo))
}

fn sentence_report(budget: usize, seed: u64) -> AxiomReport {
    let ab = letters("a,b");
    let engine = SentenceEngine::new();
    let levels: Vec<Vec<Sentence>> = (0..=budget).map(|d| enumerate_sentences(d, &ab)).collect();
    let mut pairs: Vec<(&Sentence, &Sentence)> = Vec::new();
    for (a, ss) in levels.iter().enumerate() {
        for ws in levels.iter().take(budget + 1 - a) {
            for s in ss {
                pairs.extend(ws.iter().map(|w| (s, w)));
            }
        }
    }
    let mut report = AxiomReport::new(format!("star product on sentences over {{a,b}}, degree <= {budget}"));
    report.push(AxiomCheck::from_cases(
        "closed formula = recursion",
        pairs
            .par_iter()
            .map(|&(s, w)| {
                let r = &star_sentence_closed(s, w) - &engine.star_basis(s, w);
                (!r.is_zero()).then(|| Witness::new(vec![s.to_string(), w.to_string()], &r))
            })
            .collect(),
    ));
    let mut rng = seeded(seed);
    let cases: Vec<(Sentence, Sentence, Sentence)> = (0..RANDOM_CASES)
        .map(|_| {
            let ds = rng_range(&mut rng, 1, budget);
            let dw = rng_range(&mut rng, 1, budget + 1 - ds);
            let s = random_sentence(&mut rng, ds, &ab);
            let w = random_sentence(&mut rng, dw, &ab);
            let p = shuffled(&mut rng, &w);
            (s, w, p)
        })
        .collect();
    report.push(AxiomCheck::from_cases(
        "S*W is invariant under permuting the words of W",
        cases
            .par_iter()
            .map(|(s, w, p)| {
                let r = &engine.star_basis(s, w) - &engine.star_basis(s, p);
                (!r.is_zero()).then(|| Witness::new(vec![s.to_string(), w.to_string(), p.to_string()], &r))
            })
            .collect(),
    ));
    report
}

fn postlie_reports(budget: usize) -> Result<Vec<AxiomReport>> {
    let mut fixtures: Vec<(String, FinPostLie, bool)> = vec![("trivial".into(), trivial_fixture(), true)];
    let d = budget.min(4);
    fixtures.push((format!("truncated trees, degree <= {d}"), truncated_tree_fixture(d, &Alphabet::bullet())?.0, true));
    let d = budget.min(3);
    fixtures.push((format!("truncated words, degree <= {d}"), truncated_word_fixture(d, &letters("a,b"))?.0, true));
    fixtures.push(("left grafting, <= 3 nodes".into(), left_graft_fixture(3).0, false));

    let mut out = Vec::new();
    let mut transport = AxiomReport::new("opposite exchanges right and left Post-Lie");
    let mut cases = Vec::new();
    for (name, a, right) in &fixtures {
        let op = opposite(a);
        let mut r = if *right { check_right_postlie(a) } else { check_left_postlie(a) };
        r.subject = format!("{}: {name}", r.subject);
        let same = |x: &AxiomReport, y: &AxiomReport| {
            (x.passed() != y.passed()).then(|| {
                let diff = LinComb::from_scaled(Scalar::one(), format!("{} vs {}", x.passed(), y.passed()));
                Witness::new(vec![name.clone()], &diff)
            })
        };
        cases.push(same(&check_right_postlie(a), &check_left_postlie(&op)));
        cases.push(same(&check_left_postlie(a), &check_right_postlie(&op)));
        out.push(r);
    }
    transport.push(AxiomCheck::from_cases("right(A) iff left(op A), left(A) iff right(op A)", cases));
    out.push(transport);
    Ok(out)
}

fn primitive_report(max_degree: usize) -> Result<AxiomReport> {
    let bullet = Alphabet::bullet();
    let series = pbw_dims(&decorated_tree_counts(max_degree, 1), max_degree)?;
    let mut report = AxiomReport::new(format!("primitives of one-generator forests, degree <= {max_degree}"));
    let mut forests = Vec::new();
    let mut kernels = Vec::new();
    for d in 1..=max_degree {
        forests.push(count_witness(format!("degree {d}"), enumerate_forests(d, &bullet).len(), series.h[d] as usize));
        kernels.push(count_witness(
            format!("degree {d}"),
            primitive_kernel(d, &bullet)?.dimension,
            series.l[d - 1] as usize,
        ));
    }
    report.push(AxiomCheck::from_cases("forest count = h_n", forests));
    report.push(AxiomCheck::from_cases("dim ker reduced coproduct = l_n", kernels));
    Ok(report)
}
