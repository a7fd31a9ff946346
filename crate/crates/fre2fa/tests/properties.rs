//! Cross-module invariants: structural round-trips, crisp-language
//! soundness of the quotient, and the algebraic facts the scalar
//! elimination leans on.

mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use fre2fa::fuzzy::{fuzzify, minimal_words, Matrix};
use fre2fa::generator::{generate, GeneratorConfig};
use fre2fa::glushkov::{build_position_automaton, follow_quotient, position_sets};
use fre2fa::lattice::{Structure, TruthValue};
use fre2fa::mark::{mark, PositionSymbol};
use fre2fa::parser::parse;
use fre2fa::semantics::denote;
use fre2fa::{compile, compile_crisp, FuzzyRegex, Method};

use common::{crisp_matches, first_crisp_disagreement, for_each_word, random_fuzzy_automaton, tv};

fn arb_scalar() -> impl Strategy<Value = TruthValue> {
    prop_oneof![
        (1u64..=9).prop_map(|n| tv(n, 10)),
        (1u64..=99).prop_map(|n| tv(n, 100)),
    ]
}

fn arb_expr() -> impl Strategy<Value = FuzzyRegex> {
    let leaf = prop_oneof![
        1 => Just(FuzzyRegex::Empty),
        1 => Just(FuzzyRegex::Epsilon),
        4 => prop_oneof![Just('a'), Just('b'), Just('c')].prop_map(FuzzyRegex::Sym),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| FuzzyRegex::union(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| FuzzyRegex::concat(l, r)),
            inner.clone().prop_map(FuzzyRegex::star),
            (arb_scalar(), inner).prop_map(|(v, r)| FuzzyRegex::scale(v, r)),
        ]
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(expr in arb_expr()) {
        let sigma = fre2fa::Alphabet::new(['a', 'b', 'c']).unwrap();
        let text = expr.to_string();
        prop_assert_eq!(parse(&text, &sigma).unwrap(), expr);
    }

    #[test]
    fn unmark_inverts_mark(expr in arb_expr()) {
        prop_assert_eq!(mark(&expr).unmark(), expr);
    }

    #[test]
    fn marking_numbers_every_occurrence(expr in arb_expr()) {
        // positions are 1..n in occurrence order; φ is 1 exactly on letters
        fn scalars_in_order(expr: &FuzzyRegex, out: &mut Vec<TruthValue>) {
            match expr {
                FuzzyRegex::Empty | FuzzyRegex::Epsilon | FuzzyRegex::Sym(_) => {}
                FuzzyRegex::Scale(v, inner) => {
                    out.push(v.clone());
                    scalars_in_order(inner, out);
                }
                FuzzyRegex::Union(l, r) | FuzzyRegex::Concat(l, r) => {
                    scalars_in_order(l, out);
                    scalars_in_order(r, out);
                }
                FuzzyRegex::Star(inner) => scalars_in_order(inner, out),
            }
        }
        let m = mark(&expr);
        let mut expected_scalars = Vec::new();
        scalars_in_order(&expr, &mut expected_scalars);
        let mut seen_scalars = Vec::new();
        for (p, symbol) in m.positions() {
            prop_assert!(p >= 1 && p <= m.position_count());
            match symbol {
                PositionSymbol::Letter(_) => {
                    prop_assert_eq!(m.phi(p).unwrap(), TruthValue::one());
                }
                PositionSymbol::Scalar(v) => {
                    prop_assert_eq!(&m.phi(p).unwrap(), v);
                    seen_scalars.push(v.clone());
                }
            }
        }
        prop_assert_eq!(seen_scalars, expected_scalars);
    }

    #[test]
    fn follow_never_has_more_states(expr in arb_expr()) {
        let m = mark(&expr);
        let ps = position_sets(&m);
        let position = build_position_automaton(&m, &ps);
        let follow = follow_quotient(&position, &ps);
        prop_assert_eq!(position.state_count(), m.position_count() + 1);
        prop_assert!(follow.state_count() <= position.state_count());
    }
}

#[test]
fn quotient_preserves_the_crisp_language() {
    let config = GeneratorConfig::new(5, 2, vec![tv(3, 10), tv(1, 2)]);
    let mut tested = 0;
    for seed in 0..60 {
        let expr = generate(seed, &config);
        let m = mark(&expr);
        if m.position_count() > 8 {
            continue;
        }
        let ps = position_sets(&m);
        let position = build_position_automaton(&m, &ps);
        let follow = follow_quotient(&position, &ps);
        if let Some(word) = first_crisp_disagreement(&position, &follow, 8) {
            panic!(
                "quotient changed the language of {expr} on {word:?} (seed {seed})"
            );
        }
        tested += 1;
    }
    assert!(tested >= 30, "only {tested} expressions were small enough");
}

#[test]
fn position_automaton_matches_brute_force_membership() {
    let config = GeneratorConfig::new(4, 2, vec![tv(3, 10), tv(1, 2)]);
    for seed in 0..40 {
        let expr = generate(seed, &config);
        let m = mark(&expr);
        let ps = position_sets(&m);
        let aut = build_position_automaton(&m, &ps);
        let alphabet: Vec<PositionSymbol> = aut.alphabet().iter().cloned().collect();
        for_each_word(&alphabet, 6, &mut |word| {
            assert_eq!(
                aut.accepts(word),
                crisp_matches(&m, word),
                "membership mismatch for {expr} on {word:?} (seed {seed})"
            );
            true
        });
    }
}

#[test]
fn superwords_never_beat_their_subwords() {
    let pool = [tv(1, 5), tv(3, 10), tv(1, 2), tv(7, 10)];
    let mut rng = StdRng::seed_from_u64(23);
    for structure in [Structure::Goedel, Structure::Product] {
        for _ in 0..300 {
            let len = rng.gen_range(0..=6);
            let longer: Vec<TruthValue> = (0..len)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let shorter: Vec<TruthValue> = longer
                .iter()
                .filter(|_| rng.gen_bool(0.6))
                .cloned()
                .collect();
            let weigh = |word: &[TruthValue]| {
                word.iter().fold(structure.identity(), |acc, v| {
                    structure.tensor(&acc, v)
                })
            };
            assert!(
                weigh(&longer) <= weigh(&shorter),
                "{structure}: dropping factors lowered the weight"
            );
        }
    }
    // boolean carrier: same fact over {0, 1}
    let mut rng = StdRng::seed_from_u64(29);
    for _ in 0..100 {
        let len = rng.gen_range(0..=6);
        let longer: Vec<TruthValue> = (0..len)
            .map(|_| {
                if rng.gen() {
                    TruthValue::one()
                } else {
                    TruthValue::zero()
                }
            })
            .collect();
        let shorter: Vec<TruthValue> = longer
            .iter()
            .filter(|_| rng.gen_bool(0.6))
            .cloned()
            .collect();
        let weigh = |word: &[TruthValue]| {
            word.iter().fold(TruthValue::one(), |acc, v| {
                Structure::Boolean.tensor(&acc, v)
            })
        };
        assert!(weigh(&longer) <= weigh(&shorter));
    }
}

#[test]
fn closure_construction_agrees_with_minimal_words() {
    let config = GeneratorConfig::new(4, 2, vec![tv(3, 10), tv(1, 2)]);
    for structure in [Structure::Goedel, Structure::Product] {
        for seed in 0..25 {
            let expr = generate(seed, &config);
            let (_, aut) = compile_crisp(&expr, Method::Follow);
            let fa = fuzzify(&aut, ['a', 'b'], structure).unwrap();
            for letter in ['a', 'b'] {
                let matrix = fa.transition(letter).unwrap();
                for i in 0..aut.state_count() {
                    for j in 0..aut.state_count() {
                        let by_words = minimal_words(&aut, i, letter, j)
                            .iter()
                            .map(|word| {
                                word.iter().fold(structure.identity(), |acc, s| {
                                    structure.tensor(&acc, &s.phi())
                                })
                            })
                            .fold(TruthValue::zero(), |acc, w| structure.join(&acc, &w));
                        assert_eq!(
                            matrix.get(i, j),
                            &by_words,
                            "{structure}: {expr} disagrees at ({i}, {letter}, {j})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn word_matrices_compose() {
    // σ ∘ (Δ_u ⊗ Δ_v) ∘ τ equals evaluating the concatenated word
    let mut rng = StdRng::seed_from_u64(31);
    for structure in [Structure::Goedel, Structure::Product] {
        for _ in 0..40 {
            let states = rng.gen_range(2..=4);
            let fa = random_fuzzy_automaton(&mut rng, structure, states, &['a', 'b']);
            let word: String = (0..rng.gen_range(0..=6))
                .map(|_| if rng.gen() { 'a' } else { 'b' })
                .collect();
            let split = rng.gen_range(0..=word.len());
            let product_of = |part: &str| {
                part.chars().fold(
                    Matrix::identity(states, structure),
                    |acc, c| acc.compose(fa.transition(c).unwrap(), structure),
                )
            };
            let left = product_of(&word[..split]);
            let right = product_of(&word[split..]);
            let whole = left.compose(&right, structure);
            let via_matrices = fre2fa::fuzzy::dot(
                &whole.apply_left(fa.sigma(), structure),
                fa.tau(),
                structure,
            );
            assert_eq!(via_matrices, fa.eval(&word).unwrap(), "word {word:?}");
        }
    }
}

#[test]
fn star_dominates_its_body() {
    let config = GeneratorConfig::new(4, 2, vec![tv(3, 10), tv(7, 10)]);
    let words = ["", "a", "b", "ab", "ba", "aab", "abab"];
    for seed in 0..40 {
        let expr = generate(seed, &config);
        let starred = FuzzyRegex::star(expr.clone());
        for structure in [Structure::Goedel, Structure::Product] {
            for word in words {
                assert!(
                    denote(&starred, word, structure) >= denote(&expr, word, structure),
                    "{structure}: star of {expr} lost on {word:?}"
                );
            }
        }
    }
}

#[test]
fn empty_word_degree_is_consistent_across_routes() {
    let config = GeneratorConfig::new(5, 2, vec![tv(3, 10), tv(7, 10)]);
    let sigma = config.alphabet();
    for seed in 0..60 {
        let expr = generate(seed, &config);
        for structure in [Structure::Goedel, Structure::Product] {
            let by_denotation = denote(&expr, "", structure);
            let follow = compile(&expr, &sigma, Method::Follow, structure);
            let position = compile(&expr, &sigma, Method::Position, structure);
            assert_eq!(by_denotation, follow.eval("").unwrap(), "{expr}");
            assert_eq!(by_denotation, position.eval("").unwrap(), "{expr}");
        }
    }
}
