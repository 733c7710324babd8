use proptest::prelude::*;

use postlie::extension::{tensor_star, StarProduct};
use postlie::free::{
    forest_multiset, normal_form, phi_n_image, sentence_to_perm, star_closed_multiset, star_closed_perm, ForestEngine,
    Permutation,
};
use postlie::tensor::{
    concat, coproduct, coproduct_left, coproduct_right, counit, counit_word, iterated_reduced, product, unshuffle,
};
use postlie::trees::{
    butcher, contract_rightmost, expand_leftmost_with, forest_degree, parse_forest, vee, Forest, Tree,
};
use postlie::words::{parse_sentence, sentence_degree, star_sentence_closed, PlainWord, Sentence, SentenceEngine};
use postlie::verify::{check_left_postlie, check_right_postlie, opposite, FinPostLie};
use postlie::{LinComb, Scalar, Symbol, Word};

fn leaf() -> impl Strategy<Value = Tree> {
    prop_oneof![Just(Tree::leaf("a")), Just(Tree::leaf("b"))]
}

fn tree() -> impl Strategy<Value = Tree> {
    leaf().prop_recursive(2, 4, 2, |inner| (inner.clone(), inner).prop_map(|(l, r)| vee(&l, &r)))
}

fn forest(max_len: usize, max_degree: usize) -> impl Strategy<Value = Forest> {
    prop::collection::vec(tree(), 0..=max_len)
        .prop_map(Word)
        .prop_filter("degree budget", move |f| forest_degree(f) <= max_degree)
}

fn nonempty_forest(max_len: usize, max_degree: usize) -> impl Strategy<Value = Forest> {
    forest(max_len, max_degree).prop_filter("nonempty", |f| !f.is_empty())
}

fn bullet_tree(max_leaves: u32) -> impl Strategy<Value = Tree> {
    Just(Tree::bullet()).prop_recursive(4, max_leaves, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| vee(&l, &r))
    })
}

/// Small integer combination of basis forests.
fn combination(max_degree: usize) -> impl Strategy<Value = LinComb<Forest>> {
    prop::collection::vec((forest(3, max_degree), -3i64..=3), 0..=3)
        .prop_map(|terms| LinComb::from_terms(terms.into_iter().map(|(f, c)| (f, Scalar::from(c)))))
}

fn plain_word(max_len: usize) -> impl Strategy<Value = PlainWord> {
    prop::collection::vec(prop_oneof![Just(Symbol::from('a')), Just(Symbol::from('b'))], 0..=max_len).prop_map(Word)
}

fn sentence(max_words: usize) -> impl Strategy<Value = Sentence> {
    let word = prop::collection::vec(prop_oneof![Just('a'), Just('b'), Just('c')], 1..=2)
        .prop_map(|cs| cs.into_iter().map(Symbol::from).collect::<PlainWord>());
    prop::collection::vec(word, 0..=max_words).prop_map(Word)
}

fn permutation(n: u32) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("a permutation"))
}

/// Dimension 2 with an antisymmetric bracket and entries in {-1, 0, 1}.
fn finite_algebra() -> impl Strategy<Value = FinPostLie> {
    (prop::collection::vec(-1i64..=1, 2), prop::collection::vec(-1i64..=1, 8)).prop_map(|(b, p)| {
        let v = |c: &[i64]| LinComb::from_terms(c.iter().enumerate().map(|(k, &x)| (k, Scalar::from(x))));
        let mut a = FinPostLie::new(2).unwrap();
        a.set_bracket(0, 1, v(&b)).unwrap();
        a.set_bracket(1, 0, -v(&b)).unwrap();
        for (n, chunk) in p.chunks(2).enumerate() {
            a.set_product(n / 2, n % 2, v(chunk)).unwrap();
        }
        a
    })
}

fn lc<B: Ord + Clone>(b: &B) -> LinComb<B> {
    LinComb::from_term(b.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coproduct_is_coassociative(w in plain_word(6)) {
        let d = unshuffle(&w);
        prop_assert_eq!(coproduct_left(&d), coproduct_right(&d));
    }

    #[test]
    fn coproduct_is_cocommutative(w in plain_word(6)) {
        let d = unshuffle(&w);
        prop_assert_eq!(d.map_terms(|p| p.swapped()), d);
    }

    #[test]
    fn counit_law(w in plain_word(6)) {
        let d = unshuffle(&w);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for (p, c) in d.iter() {
            left.add_term(p.right.clone(), c * &counit_word(&p.left));
            right.add_term(p.left.clone(), c * &counit_word(&p.right));
        }
        prop_assert_eq!(&left, &lc(&w));
        prop_assert_eq!(&right, &lc(&w));
    }

    #[test]
    fn iterated_reduced_vanishes(w in plain_word(5), extra in 0usize..3) {
        prop_assert!(iterated_reduced(w.len() + extra, &lc(&w)).is_zero());
    }

    #[test]
    fn star_keeps_length_and_adds_degree(x in nonempty_forest(3, 4), y in forest(3, 4)) {
        let r = ForestEngine::new().star_basis(&x, &y);
        for (term, _) in r.iter() {
            prop_assert_eq!(term.len(), x.len());
            prop_assert_eq!(forest_degree(term), forest_degree(&x) + forest_degree(&y));
        }
    }

    #[test]
    fn star_formulas_agree(x in nonempty_forest(2, 3), y in nonempty_forest(3, 4)) {
        let rec = ForestEngine::new().star_basis(&x, &y);
        prop_assert_eq!(&star_closed_multiset(&x, &y), &rec);
        prop_assert_eq!(&star_closed_perm(&x, &y), &rec);
    }

    #[test]
    fn unit_laws(x in combination(5)) {
        let e = ForestEngine::new();
        let one = lc(&Forest::unit());
        prop_assert_eq!(&e.star(&x, &one), &x);
        prop_assert_eq!(e.star(&one, &x), one.scale(&counit(&x)));
    }

    #[test]
    fn star_is_a_coalgebra_morphism(x in combination(3), y in combination(2)) {
        let e = ForestEngine::new();
        let xy = e.star(&x, &y);
        prop_assert_eq!(coproduct(&xy), tensor_star(&e, &coproduct(&x), &coproduct(&y)));
        prop_assert_eq!(counit(&xy), counit(&x) * counit(&y));
    }

    #[test]
    fn product_rules(x in forest(2, 2), y in forest(2, 2), z in forest(2, 2)) {
        let e = ForestEngine::new();
        let lhs = e.star_basis(&concat(&x, &y), &z);
        let mut rhs = LinComb::zero();
        for (p, c) in unshuffle(&z).iter() {
            rhs.add_scaled(c, &product(&e.star_basis(&x, &p.left), &e.star_basis(&y, &p.right)));
        }
        prop_assert_eq!(lhs, rhs);
        let lhs = e.star(&e.star_basis(&x, &y), &lc(&z));
        let mut inner = LinComb::zero();
        for (p, c) in unshuffle(&z).iter() {
            inner.add_scaled(c, &product(&e.star_basis(&y, &p.left), &lc(&p.right)));
        }
        prop_assert_eq!(lhs, e.star(&lc(&x), &inner));
    }

    #[test]
    fn multiset_has_factorial_size(x in nonempty_forest(4, 8)) {
        let m = forest_multiset(&x);
        prop_assert_eq!(m.cardinality(), (1..=x.len()).product::<usize>());
        prop_assert_eq!(phi_n_image(&x), m);
    }

    #[test]
    fn contraction_is_a_morphism(x in bullet_tree(6), y in bullet_tree(6)) {
        let lhs = contract_rightmost(&vee(&x, &y));
        prop_assert_eq!(lhs, butcher(&contract_rightmost(&x), &contract_rightmost(&y)));
        prop_assert_eq!(expand_leftmost_with(&contract_rightmost(&x), &Symbol::bullet()), x.clone());
        prop_assert_eq!(contract_rightmost(&x).node_count(), x.degree());
    }

    #[test]
    fn normal_form_inverts_beta(sigma in permutation(7)) {
        let s = normal_form(&sigma);
        prop_assert_eq!(sentence_to_perm(&s), sigma.clone());
        prop_assert_eq!(s.to_string().parse::<postlie::free::PackedSentence>().unwrap(), s);
        prop_assert_eq!(sigma.to_string().parse::<Permutation>().unwrap(), sigma);
    }

    #[test]
    fn words_closed_formula(s in sentence(4), w in sentence(3)) {
        let e = SentenceEngine::new();
        let closed = star_sentence_closed(&s, &w);
        prop_assert_eq!(&closed, &e.star_basis(&s, &w));
        if w.len() > s.len() {
            prop_assert!(closed.is_zero());
        }
        for (term, _) in closed.iter() {
            prop_assert_eq!(term.len(), s.len());
            prop_assert_eq!(sentence_degree(term), sentence_degree(&s) + sentence_degree(&w));
        }
    }

    #[test]
    fn words_ignore_order_of_right_factor(s in sentence(4), w in sentence(3).prop_flat_map(|w| {
        let len = w.len();
        (Just(w), Just((0..len).collect::<Vec<_>>()).prop_shuffle())
    })) {
        let (w, order) = w;
        let permuted: Sentence = order.iter().map(|&i| w.letters()[i].clone()).collect();
        let e = SentenceEngine::new();
        prop_assert_eq!(e.star_basis(&s, &w), e.star_basis(&s, &permuted));
    }

    #[test]
    fn printing_round_trips(x in forest(3, 6), s in sentence(3)) {
        prop_assert_eq!(parse_forest(&x.to_string(), None).unwrap(), x.clone());
        for t in x.letters() {
            prop_assert_eq!(&t.to_string().parse::<Tree>().unwrap(), t);
        }
        prop_assert_eq!(parse_sentence(&s.to_string(), None).unwrap(), s);
    }

    #[test]
    fn linear_combinations_form_a_group(x in combination(3), y in combination(3), c in -4i64..=4) {
        prop_assert_eq!(&(&(&x + &y) - &y), &x);
        let c = Scalar::from(c);
        prop_assert_eq!((&x + &y).scale(&c), &x.scale(&c) + &y.scale(&c));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn opposite_exchanges_sides(a in finite_algebra()) {
        let op = opposite(&a);
        prop_assert_eq!(&opposite(&op), &a);
        prop_assert_eq!(check_right_postlie(&a).passed(), check_left_postlie(&op).passed());
        prop_assert_eq!(check_left_postlie(&a).passed(), check_right_postlie(&op).passed());
        prop_assert_eq!(FinPostLie::from_json_str(&a.to_json_string()).unwrap(), a);
    }
}
