//! Denotational semantics: the fuzzy language an expression stands for,
//! evaluated compositionally on one word at a time.
//!
//! This is the crate's ground truth; the automata constructions are
//! checked against it. Evaluation memoizes on subexpression × word
//! interval, so concatenation and star cost polynomially in the word
//! length. For a starred expression on a nonempty interval only nonempty
//! factors are considered: inserting empty factors can only multiply by
//! values at or below the identity, so the ε-free decomposition already
//! dominates the join.

use std::collections::HashMap;

use crate::ast::FuzzyRegex;
use crate::lattice::{Structure, TruthValue};

struct Denoter<'a> {
    word: &'a [char],
    structure: Structure,
    memo: HashMap<(*const FuzzyRegex, usize, usize), TruthValue>,
}

impl<'a> Denoter<'a> {
    fn eval(&mut self, expr: &'a FuzzyRegex, start: usize, end: usize) -> TruthValue {
        let key = (expr as *const FuzzyRegex, start, end);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let value = self.compute(expr, start, end);
        self.memo.insert(key, value.clone());
        value
    }

    fn compute(&mut self, expr: &'a FuzzyRegex, start: usize, end: usize) -> TruthValue {
        let s = self.structure;
        match expr {
            FuzzyRegex::Empty => TruthValue::zero(),
            FuzzyRegex::Epsilon => {
                if start == end {
                    s.identity()
                } else {
                    TruthValue::zero()
                }
            }
            FuzzyRegex::Sym(c) => {
                if end == start + 1 && self.word[start] == *c {
                    s.identity()
                } else {
                    TruthValue::zero()
                }
            }
            FuzzyRegex::Scale(value, inner) => s.tensor(value, &self.eval(inner, start, end)),
            FuzzyRegex::Union(l, r) => {
                let left = self.eval(l, start, end);
                if left.is_one() {
                    return left;
                }
                s.join(&left, &self.eval(r, start, end))
            }
            FuzzyRegex::Concat(l, r) => {
                let mut acc = TruthValue::zero();
                for split in start..=end {
                    let left = self.eval(l, start, split);
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.eval(r, split, end);
                    if right.is_zero() {
                        continue;
                    }
                    acc = s.join(&acc, &s.tensor(&left, &right));
                    if acc.is_one() {
                        break;
                    }
                }
                acc
            }
            FuzzyRegex::Star(inner) => {
                if start == end {
                    return s.identity();
                }
                // peel one nonempty factor, then the star again
                let mut acc = TruthValue::zero();
                for split in (start + 1)..=end {
                    let head = self.eval(inner, start, split);
                    if head.is_zero() {
                        continue;
                    }
                    let tail = self.eval(expr, split, end);
                    if tail.is_zero() {
                        continue;
                    }
                    acc = s.join(&acc, &s.tensor(&head, &tail));
                    if acc.is_one() {
                        break;
                    }
                }
                acc
            }
        }
    }
}

/// The degree to which `word` belongs to the language of `expr`.
pub fn denote(expr: &FuzzyRegex, word: &str, structure: Structure) -> TruthValue {
    let chars: Vec<char> = word.chars().collect();
    let mut denoter = Denoter {
        word: &chars,
        structure,
        memo: HashMap::new(),
    };
    denoter.eval(expr, 0, chars.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_inferring;

    fn tv(n: u64, d: u64) -> TruthValue {
        TruthValue::from_ratio(n, d).unwrap()
    }

    fn d(text: &str, word: &str, structure: Structure) -> TruthValue {
        let (expr, _) = parse_inferring(text).unwrap();
        denote(&expr, word, structure)
    }

    #[test]
    fn sample_degrees() {
        let g = Structure::Goedel;
        assert_eq!(d("0.2((0.1(ab)*)*+b)", "b", g), tv(1, 5));
        assert_eq!(d("0.2((0.1(ab)*)*+b)", "", g), tv(1, 5));
        assert_eq!(d("0.2((0.1(ab)*)*+b)", "ab", g), tv(1, 10));
        assert_eq!(d("0.2((0.1(ab)*)*+b)", "ba", g), TruthValue::zero());
    }

    #[test]
    fn empty_denotes_zero_everywhere() {
        for word in ["", "a", "ab"] {
            assert_eq!(d("@null", word, Structure::Goedel), TruthValue::zero());
        }
    }

    #[test]
    fn star_contains_the_empty_word() {
        assert_eq!(d("(ab)*", "", Structure::Goedel), TruthValue::one());
        assert_eq!(d("@null*", "", Structure::Goedel), TruthValue::one());
        assert_eq!(d("@eps*", "a", Structure::Goedel), TruthValue::zero());
    }

    #[test]
    fn characteristic_functions() {
        assert_eq!(d("a", "a", Structure::Product), TruthValue::one());
        assert_eq!(d("a", "", Structure::Product), TruthValue::zero());
        assert_eq!(d("a", "aa", Structure::Product), TruthValue::zero());
        assert_eq!(d("@eps", "", Structure::Product), TruthValue::one());
    }

    #[test]
    fn product_structure_multiplies_along_factors() {
        // (0.5a)* on "aa": 0.5 ⊗ 0.5
        assert_eq!(d("(0.5a)*", "aa", Structure::Product), tv(1, 4));
        assert_eq!(d("(0.5a)*", "aa", Structure::Goedel), tv(1, 2));
    }

    #[test]
    fn union_takes_the_better_branch() {
        assert_eq!(d("0.3a+0.7a", "a", Structure::Goedel), tv(7, 10));
    }

    #[test]
    fn scalars_anywhere_in_a_concatenation() {
        // trailing scalar: a(0.5 ε)
        assert_eq!(d("a0.5@eps", "a", Structure::Goedel), tv(1, 2));
        // scalar between letters
        assert_eq!(d("a(0.5b)", "ab", Structure::Product), tv(1, 2));
    }

    #[test]
    fn star_monotone_over_its_body() {
        let (expr, _) = parse_inferring("0.3(ab)").unwrap();
        let starred = FuzzyRegex::star(expr.clone());
        for word in ["", "ab", "abab", "a", "b"] {
            let single = denote(&expr, word, Structure::Goedel);
            let star = denote(&starred, word, Structure::Goedel);
            assert!(star >= single, "star ⊇ body on {word:?}");
        }
    }
}
