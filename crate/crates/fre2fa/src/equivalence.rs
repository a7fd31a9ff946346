//! Bounded language-equivalence checking: both automaton routes against
//! the denotational semantics, word by word.
//!
//! Degrees live in an infinite carrier, so instead of a symbolic decision
//! procedure the check enumerates every word up to a length bound and
//! compares exact rationals. A budget caps the enumeration size; the
//! default is one million words.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ast::{Alphabet, FuzzyRegex};
use crate::fuzzy::dot;
use crate::generator::{generate, GeneratorConfig};
use crate::lattice::{Structure, TruthValue};
use crate::semantics::denote;
use crate::{compile, Method};

/// Default cap on the number of words one check may enumerate.
pub const DEFAULT_WORD_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("enumerating {required} words exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// Outcome of one equivalence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    /// Every enumerated word got the same degree from the follow automaton,
    /// the position automaton, and the denotation.
    Equal,
    /// The first word (in depth-first order) where any pair disagreed.
    Counterexample {
        word: String,
        oracle: TruthValue,
        follow: TruthValue,
        position: TruthValue,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// The result of checking one expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    /// The checked expression, rendered in canonical text form.
    pub expression: String,
    pub structure: Structure,
    pub max_len: usize,
    /// Size of the enumerated word set: `Σ_{l=0..max_len} |Σ|^l`.
    pub words_checked: u64,
    pub follow_states: usize,
    pub position_states: usize,
    pub verdict: Verdict,
}

/// How many words of length at most `max_len` exist over `alphabet_size`
/// letters; `None` if the count exceeds `budget`.
fn word_count(alphabet_size: usize, max_len: usize, budget: u64) -> Option<u64> {
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=max_len {
        total += layer;
        if total > budget as u128 {
            return None;
        }
        layer = layer.checked_mul(alphabet_size as u128)?;
    }
    Some(total as u64)
}

/// Builds both fuzzy automata for `expr` and compares them with the
/// denotation on every word over `sigma` of length at most `max_len`.
pub fn check_equivalence(
    expr: &FuzzyRegex,
    sigma: &Alphabet,
    structure: Structure,
    max_len: usize,
    budget: u64,
) -> Result<EquivalenceReport, EquivalenceError> {
    let words_checked = word_count(sigma.len(), max_len, budget).ok_or_else(|| {
        let mut required: u128 = 0;
        let mut layer: u128 = 1;
        for _ in 0..=max_len {
            required += layer;
            layer = layer.saturating_mul(sigma.len() as u128);
        }
        EquivalenceError::BudgetExceeded {
            required,
            budget,
        }
    })?;

    let follow = compile(expr, sigma, Method::Follow, structure);
    let position = compile(expr, sigma, Method::Position, structure);
    let letters: Vec<char> = sigma.iter().collect();

    // depth-first over the word tree, extending reach vectors one letter
    // at a time so shared prefixes are paid for once
    struct Search<'a> {
        expr: &'a FuzzyRegex,
        structure: Structure,
        letters: &'a [char],
        max_len: usize,
        follow: &'a crate::fuzzy::FuzzyAutomaton,
        position: &'a crate::fuzzy::FuzzyAutomaton,
        word: String,
    }

    impl Search<'_> {
        fn visit(
            &mut self,
            reach_follow: &[TruthValue],
            reach_position: &[TruthValue],
        ) -> Option<Verdict> {
            let oracle = denote(self.expr, &self.word, self.structure);
            let follow_value = dot(reach_follow, self.follow.tau(), self.structure);
            let position_value = dot(reach_position, self.position.tau(), self.structure);
            if oracle != follow_value || oracle != position_value {
                return Some(Verdict::Counterexample {
                    word: self.word.clone(),
                    oracle,
                    follow: follow_value,
                    position: position_value,
                });
            }
            if self.word.len() == self.max_len {
                return None;
            }
            for &letter in self.letters {
                let next_follow = self
                    .follow
                    .transition(letter)
                    .expect("alphabet letter")
                    .apply_left(reach_follow, self.structure);
                let next_position = self
                    .position
                    .transition(letter)
                    .expect("alphabet letter")
                    .apply_left(reach_position, self.structure);
                self.word.push(letter);
                let verdict = self.visit(&next_follow, &next_position);
                self.word.pop();
                if verdict.is_some() {
                    return verdict;
                }
            }
            None
        }
    }

    let mut search = Search {
        expr,
        structure,
        letters: &letters,
        max_len,
        follow: &follow,
        position: &position,
        word: String::new(),
    };
    let verdict = search
        .visit(follow.sigma(), position.sigma())
        .unwrap_or(Verdict::Equal);

    Ok(EquivalenceReport {
        expression: expr.to_string(),
        structure,
        max_len,
        words_checked,
        follow_states: follow.state_count(),
        position_states: position.state_count(),
        verdict,
    })
}

/// Aggregate outcome of a batch of seeded random checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub trials: u64,
    pub seed: u64,
    pub structure: Structure,
    pub max_len: usize,
    pub max_depth: usize,
    pub alphabet_size: usize,
    pub scalar_pool: Vec<TruthValue>,
    pub equal_count: u64,
    /// Trials where the follow automaton had strictly fewer states.
    pub strictly_smaller_count: u64,
    /// Reports of every trial that found a disagreement.
    pub failures: Vec<EquivalenceReport>,
}

impl FuzzReport {
    pub fn all_equal(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `count` seeded random equivalence checks. The `i`-th trial uses
/// seed `seed + i`, so any failure replays in isolation.
pub fn run_fuzz(
    count: u64,
    seed: u64,
    config: &GeneratorConfig,
    structure: Structure,
    max_len: usize,
    budget: u64,
) -> Result<FuzzReport, EquivalenceError> {
    let sigma = config.alphabet();
    let mut equal_count = 0;
    let mut strictly_smaller_count = 0;
    let mut failures = Vec::new();
    for i in 0..count {
        let expr = generate(seed.wrapping_add(i), config);
        let report = check_equivalence(&expr, &sigma, structure, max_len, budget)?;
        if report.follow_states < report.position_states {
            strictly_smaller_count += 1;
        }
        if report.verdict.is_equal() {
            equal_count += 1;
        } else {
            failures.push(report);
        }
    }
    Ok(FuzzReport {
        trials: count,
        seed,
        structure,
        max_len,
        max_depth: config.max_depth,
        alphabet_size: config.alphabet_size,
        scalar_pool: config.scalar_pool.clone(),
        equal_count,
        strictly_smaller_count,
        failures,
    })
}
