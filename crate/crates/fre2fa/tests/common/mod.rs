//! Shared oracles for the integration suites.
//!
//! Everything here recomputes results by definitions that are independent
//! of the construction code paths they check: a recursive membership
//! matcher for crisp languages, the recursive extended transition function
//! for fuzzy evaluation, and seeded random automata.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::Rng;

use fre2fa::fuzzy::{FuzzyAutomaton, Matrix};
use fre2fa::glushkov::{CrispAutomaton, StateId};
use fre2fa::lattice::{Structure, TruthValue};
use fre2fa::mark::{MarkedExpression, MarkedNode, PositionSymbol};

pub fn tv(n: u64, d: u64) -> TruthValue {
    TruthValue::from_ratio(n, d).unwrap()
}

/// Brute-force membership of a word over `Σ ∪ Y` in the marked-erased
/// language, by interval recursion on the desugared tree.
pub fn crisp_matches(m: &MarkedExpression, word: &[PositionSymbol]) -> bool {
    fn go(
        m: &MarkedExpression,
        node: &MarkedNode,
        word: &[PositionSymbol],
        i: usize,
        j: usize,
        memo: &mut HashMap<(*const MarkedNode, usize, usize), bool>,
    ) -> bool {
        let key = (node as *const MarkedNode, i, j);
        if let Some(&hit) = memo.get(&key) {
            return hit;
        }
        let result = match node {
            MarkedNode::Empty => false,
            MarkedNode::Epsilon => i == j,
            MarkedNode::Pos(p) => j == i + 1 && &word[i] == m.symbol(*p).unwrap(),
            MarkedNode::Union(l, r) => {
                go(m, l, word, i, j, memo) || go(m, r, word, i, j, memo)
            }
            MarkedNode::Concat(l, r) => (i..=j)
                .any(|k| go(m, l, word, i, k, memo) && go(m, r, word, k, j, memo)),
            MarkedNode::Star(inner) => {
                i == j
                    || (i + 1..=j).any(|k| {
                        go(m, inner, word, i, k, memo) && go(m, node, word, k, j, memo)
                    })
            }
        };
        memo.insert(key, result);
        result
    }
    let mut memo = HashMap::new();
    go(m, m.root(), word, 0, word.len(), &mut memo)
}

/// Walks every word over `alphabet` up to `max_len`, calling `visit` with
/// the word; stops early if `visit` returns `false`.
pub fn for_each_word<F: FnMut(&[PositionSymbol]) -> bool>(
    alphabet: &[PositionSymbol],
    max_len: usize,
    visit: &mut F,
) -> bool {
    fn go<F: FnMut(&[PositionSymbol]) -> bool>(
        alphabet: &[PositionSymbol],
        max_len: usize,
        word: &mut Vec<PositionSymbol>,
        visit: &mut F,
    ) -> bool {
        if !visit(word) {
            return false;
        }
        if word.len() == max_len {
            return true;
        }
        for symbol in alphabet {
            word.push(symbol.clone());
            if !go(alphabet, max_len, word, visit) {
                return false;
            }
            word.pop();
        }
        true
    }
    go(alphabet, max_len, &mut Vec::new(), visit)
}

/// First word (in depth-first order) on which the two crisp automata
/// disagree, enumerating up to `max_len` over the union of their
/// alphabets.
pub fn first_crisp_disagreement(
    left: &CrispAutomaton,
    right: &CrispAutomaton,
    max_len: usize,
) -> Option<Vec<PositionSymbol>> {
    let alphabet: Vec<PositionSymbol> = left
        .alphabet()
        .union(right.alphabet())
        .cloned()
        .collect();

    fn go(
        left: &CrispAutomaton,
        right: &CrispAutomaton,
        alphabet: &[PositionSymbol],
        max_len: usize,
        word: &mut Vec<PositionSymbol>,
        left_states: &BTreeSet<StateId>,
        right_states: &BTreeSet<StateId>,
    ) -> Option<Vec<PositionSymbol>> {
        let left_accepts = left_states.iter().any(|s| left.is_final(*s));
        let right_accepts = right_states.iter().any(|s| right.is_final(*s));
        if left_accepts != right_accepts {
            return Some(word.clone());
        }
        if word.len() == max_len {
            return None;
        }
        for symbol in alphabet {
            let next_left = left.step(left_states, symbol);
            let next_right = right.step(right_states, symbol);
            if next_left.is_empty() && next_right.is_empty() {
                continue;
            }
            word.push(symbol.clone());
            let hit = go(left, right, alphabet, max_len, word, &next_left, &next_right);
            word.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    let start_left = BTreeSet::from([left.initial()]);
    let start_right = BTreeSet::from([right.initial()]);
    go(
        left,
        right,
        &alphabet,
        max_len,
        &mut Vec::new(),
        &start_left,
        &start_right,
    )
}

/// The extended transition function of Def-style recursion: the relation
/// of a word is the identity on the empty word, and otherwise the
/// join-tensor composition of the prefix relation with the last symbol's
/// single-step transition.
pub fn extended_transition(fa: &FuzzyAutomaton, word: &[char]) -> Vec<Vec<TruthValue>> {
    let k = fa.state_count();
    let structure = fa.structure();
    match word.split_last() {
        None => (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            TruthValue::one()
                        } else {
                            TruthValue::zero()
                        }
                    })
                    .collect()
            })
            .collect(),
        Some((&last, prefix)) => {
            let head = extended_transition(fa, prefix);
            let step = fa.transition(last).expect("symbol in alphabet");
            let mut relation = vec![vec![TruthValue::zero(); k]; k];
            for (q0, row) in relation.iter_mut().enumerate() {
                for (q1, slot) in row.iter_mut().enumerate() {
                    let mut acc = TruthValue::zero();
                    for (q2, via) in head[q0].iter().enumerate() {
                        let through = structure.tensor(via, step.get(q2, q1));
                        acc = structure.join(&acc, &through);
                    }
                    *slot = acc;
                }
            }
            relation
        }
    }
}

/// Word degree straight from the extended transition function:
/// `⋁ σ(q0) ⊗ δ*(q0, u, q1) ⊗ τ(q1)`.
pub fn eval_by_extended_transition(fa: &FuzzyAutomaton, word: &str) -> TruthValue {
    let structure = fa.structure();
    let chars: Vec<char> = word.chars().collect();
    let relation = extended_transition(fa, &chars);
    let mut acc = TruthValue::zero();
    for (q0, start) in fa.sigma().iter().enumerate() {
        for (q1, end) in fa.tau().iter().enumerate() {
            let through = structure.tensor(&structure.tensor(start, &relation[q0][q1]), end);
            acc = structure.join(&acc, &through);
        }
    }
    acc
}

/// A random truth value from a small exact pool (including 0 and 1).
pub fn random_value(rng: &mut StdRng) -> TruthValue {
    match rng.gen_range(0u32..6) {
        0 => TruthValue::zero(),
        1 => TruthValue::one(),
        2 => tv(3, 10),
        3 => tv(1, 2),
        4 => tv(7, 10),
        _ => tv(1, 5),
    }
}

/// A random fuzzy automaton with `states` states over `letters`.
pub fn random_fuzzy_automaton(
    rng: &mut StdRng,
    structure: Structure,
    states: usize,
    letters: &[char],
) -> FuzzyAutomaton {
    let mut delta = BTreeMap::new();
    for &c in letters {
        let mut matrix = Matrix::zeros(states);
        for i in 0..states {
            for j in 0..states {
                if rng.gen_bool(0.4) {
                    matrix.set(i, j, random_value(rng));
                }
            }
        }
        delta.insert(c, matrix);
    }
    let sigma = (0..states).map(|_| random_value(rng)).collect();
    let tau = (0..states).map(|_| random_value(rng)).collect();
    FuzzyAutomaton::new(structure, letters.iter().copied().collect(), delta, sigma, tau)
        .expect("dimensions are consistent")
}

/// A random crisp automaton over two letters and two scalar symbols, with
/// every state reachable in principle but no structural guarantees.
pub fn random_crisp_automaton(rng: &mut StdRng, states: usize) -> CrispAutomaton {
    let symbols = [
        PositionSymbol::Letter('a'),
        PositionSymbol::Letter('b'),
        PositionSymbol::Scalar(tv(3, 10)),
        PositionSymbol::Scalar(tv(1, 2)),
    ];
    let mut transitions = BTreeSet::new();
    let edge_count = rng.gen_range(states..=states * 3);
    for _ in 0..edge_count {
        let from = rng.gen_range(0..states);
        let to = rng.gen_range(0..states);
        let symbol = symbols[rng.gen_range(0..symbols.len())].clone();
        transitions.insert((from, symbol, to));
    }
    let mut finals = BTreeSet::new();
    for state in 0..states {
        if rng.gen_bool(0.3) {
            finals.insert(state);
        }
    }
    let labels = (0..states).map(|s| BTreeSet::from([s])).collect();
    CrispAutomaton::new(states, transitions, finals, labels)
}
