//! Fuzzy automata: transition matrices over a truth-value algebra, the
//! scalar-elimination construction, and word evaluation.
//!
//! A crisp automaton over `Σ ∪ Y` becomes a fuzzy automaton over `Σ` by
//! absorbing scalar-labelled edges into weights. The scalar closure `C`
//! collects, for every state pair, the best `⊗`-product over scalar-only
//! paths; then each letter matrix is `C ⊗ E_a` (relational composition
//! over `(∨, ⊗)`) and the fuzzy final vector is `C ⊗ χ_F`, which also
//! absorbs scalar paths that trail the last letter. Integrality (`e = 1`)
//! is what makes the closure finite: a path that revisits a state embeds a
//! simple path whose weight is at least as good.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::glushkov::{CrispAutomaton, StateId};
use crate::lattice::{Structure, TruthValue};
use crate::mark::PositionSymbol;

/// A square matrix of truth values, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    size: usize,
    entries: Vec<TruthValue>,
}

impl Matrix {
    pub fn zeros(size: usize) -> Self {
        Matrix {
            size,
            entries: vec![TruthValue::zero(); size * size],
        }
    }

    /// The identity for `(∨, ⊗)`-composition: `e` on the diagonal, 0 off it.
    pub fn identity(size: usize, structure: Structure) -> Self {
        let mut m = Matrix::zeros(size);
        for i in 0..size {
            m.set(i, i, structure.identity());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &TruthValue {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: TruthValue) {
        self.entries[row * self.size + col] = value;
    }

    /// Entrywise join.
    pub fn join(&self, other: &Matrix, structure: Structure) -> Matrix {
        assert_eq!(self.size, other.size);
        Matrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| structure.join(a, b))
                .collect(),
        }
    }

    /// Relational composition over `(∨, ⊗)`.
    pub fn compose(&self, other: &Matrix, structure: Structure) -> Matrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let left = self.get(i, k);
                if left.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let right = other.get(k, j);
                    if right.is_zero() {
                        continue;
                    }
                    let through = structure.tensor(left, right);
                    let joined = structure.join(out.get(i, j), &through);
                    out.set(i, j, joined);
                }
            }
        }
        out
    }

    /// Row vector times matrix over `(∨, ⊗)`.
    pub fn apply_left(&self, vector: &[TruthValue], structure: Structure) -> Vec<TruthValue> {
        assert_eq!(vector.len(), self.size);
        let mut out = vec![TruthValue::zero(); self.size];
        for (i, v) in vector.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let entry = self.get(i, j);
                if entry.is_zero() {
                    continue;
                }
                let through = structure.tensor(v, entry);
                *slot = structure.join(slot, &through);
            }
        }
        out
    }
}

/// `(∨, ⊗)` dot product of two vectors.
pub fn dot(a: &[TruthValue], b: &[TruthValue], structure: Structure) -> TruthValue {
    assert_eq!(a.len(), b.len());
    let mut acc = TruthValue::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = structure.join(&acc, &structure.tensor(x, y));
    }
    acc
}

/// The reflexive-transitive scalar closure of a crisp automaton:
/// `matrix[i][j]` is the join over scalar-only paths `i → j` of their
/// `⊗`-weight, with the empty path contributing `e` on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarClosure {
    pub matrix: Matrix,
}

/// Computes the scalar closure by iterated squaring of
/// `I ∨ S ∨ C⊗C` until it stops changing, where `S` holds the joins of
/// parallel scalar edges.
pub fn scalar_closure(aut: &CrispAutomaton, structure: Structure) -> ScalarClosure {
    let n = aut.state_count();
    let mut step = Matrix::identity(n, structure);
    for (from, symbol, to) in aut.transitions() {
        if let PositionSymbol::Scalar(value) = symbol {
            let joined = structure.join(step.get(*from, *to), value);
            step.set(*from, *to, joined);
        }
    }
    let mut closure = step;
    loop {
        let squared = closure.compose(&closure, structure);
        let next = closure.join(&squared, structure);
        if next == closure {
            return ScalarClosure { matrix: closure };
        }
        closure = next;
    }
}

/// Errors from constructing or evaluating fuzzy automata.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    /// Scalar elimination needs the tensor identity to be the lattice top.
    #[error("structure `{0}` is not integral")]
    StructureNotIntegral(Structure),
    /// A word symbol outside the automaton's alphabet.
    #[error("symbol `{0}` is not in the automaton's alphabet")]
    UnknownSymbol(char),
    /// Matrix or vector dimensions that disagree with the state count.
    #[error("{0}")]
    Malformed(String),
}

/// A fuzzy automaton: one transition matrix per letter, a fuzzy initial
/// vector `σ`, and a fuzzy final vector `τ`, all over one [`Structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyAutomaton {
    structure: Structure,
    state_count: usize,
    alphabet: BTreeSet<char>,
    delta: BTreeMap<char, Matrix>,
    sigma: Vec<TruthValue>,
    tau: Vec<TruthValue>,
}

impl FuzzyAutomaton {
    /// Assembles an automaton, checking dimensions and alphabet coverage.
    pub fn new(
        structure: Structure,
        alphabet: BTreeSet<char>,
        delta: BTreeMap<char, Matrix>,
        sigma: Vec<TruthValue>,
        tau: Vec<TruthValue>,
    ) -> Result<Self, FuzzyError> {
        let state_count = sigma.len();
        if state_count == 0 {
            return Err(FuzzyError::Malformed("no states".into()));
        }
        if tau.len() != state_count {
            return Err(FuzzyError::Malformed(format!(
                "τ has {} entries for {} states",
                tau.len(),
                state_count
            )));
        }
        let keys: BTreeSet<char> = delta.keys().copied().collect();
        if keys != alphabet {
            return Err(FuzzyError::Malformed(
                "transition matrices do not cover the alphabet exactly".into(),
            ));
        }
        for (symbol, matrix) in &delta {
            if matrix.size() != state_count {
                return Err(FuzzyError::Malformed(format!(
                    "matrix for `{symbol}` is {}×{0} but there are {} states",
                    matrix.size(),
                    state_count
                )));
            }
        }
        Ok(FuzzyAutomaton {
            structure,
            state_count,
            alphabet,
            delta,
            sigma,
            tau,
        })
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &BTreeSet<char> {
        &self.alphabet
    }

    /// The transition matrix of one letter.
    pub fn transition(&self, symbol: char) -> Option<&Matrix> {
        self.delta.get(&symbol)
    }

    pub fn sigma(&self) -> &[TruthValue] {
        &self.sigma
    }

    pub fn tau(&self) -> &[TruthValue] {
        &self.tau
    }

    /// The configuration vector after reading `word`: per-state degrees of
    /// reaching that state, starting from `σ`.
    pub fn reach(&self, word: &str) -> Result<Vec<TruthValue>, FuzzyError> {
        let mut vector = self.sigma.clone();
        for symbol in word.chars() {
            let matrix = self
                .delta
                .get(&symbol)
                .ok_or(FuzzyError::UnknownSymbol(symbol))?;
            vector = matrix.apply_left(&vector, self.structure);
        }
        Ok(vector)
    }

    /// The degree of membership of `word`: `reach(word) ∘ τ`. The empty
    /// word yields `σ ∘ τ`.
    pub fn eval(&self, word: &str) -> Result<TruthValue, FuzzyError> {
        Ok(dot(&self.reach(word)?, &self.tau, self.structure))
    }
}

/// Eliminates scalar symbols from a crisp automaton over `Σ ∪ Y`,
/// producing a fuzzy automaton over the declared letters.
///
/// Each letter matrix is `C ⊗ E_a` with `C` the scalar closure and `E_a`
/// the crisp `a`-edge indicator; `τ = C ⊗ χ_F` picks up scalar paths into
/// final states; `σ` is the unit vector at state 0. Letters of `sigma`
/// with no edges get all-zero matrices.
pub fn fuzzify<I: IntoIterator<Item = char>>(
    aut: &CrispAutomaton,
    sigma: I,
    structure: Structure,
) -> Result<FuzzyAutomaton, FuzzyError> {
    if !structure.is_integral() {
        return Err(FuzzyError::StructureNotIntegral(structure));
    }
    let n = aut.state_count();
    let closure = scalar_closure(aut, structure).matrix;

    let mut alphabet: BTreeSet<char> = sigma.into_iter().collect();
    alphabet.extend(aut.alphabet().iter().filter_map(PositionSymbol::as_letter));

    let mut edge_indicators: BTreeMap<char, Matrix> = alphabet
        .iter()
        .map(|&c| (c, Matrix::zeros(n)))
        .collect();
    for (from, symbol, to) in aut.transitions() {
        if let PositionSymbol::Letter(c) = symbol {
            edge_indicators
                .get_mut(c)
                .expect("alphabet covers all letter edges")
                .set(*from, *to, structure.identity());
        }
    }
    let delta: BTreeMap<char, Matrix> = edge_indicators
        .into_iter()
        .map(|(c, edges)| (c, closure.compose(&edges, structure)))
        .collect();

    let mut finals_indicator = vec![TruthValue::zero(); n];
    for &f in aut.finals() {
        finals_indicator[f] = structure.identity();
    }
    let tau: Vec<TruthValue> = (0..n)
        .map(|i| {
            let row: Vec<TruthValue> = (0..n).map(|j| closure.get(i, j).clone()).collect();
            dot(&row, &finals_indicator, structure)
        })
        .collect();

    let mut initial = vec![TruthValue::zero(); n];
    initial[0] = structure.identity();

    FuzzyAutomaton::new(structure, alphabet, delta, initial, tau)
}

/// Is `needle` a scattered subword of `haystack`?
fn is_subword(needle: &[PositionSymbol], haystack: &[PositionSymbol]) -> bool {
    let mut it = haystack.iter();
    needle.iter().all(|sym| it.any(|h| h == sym))
}

/// Enumerates the minimal words (under scattered-subword order) of the
/// form `Y*·a` that drive the crisp automaton from `from` to `to`: a
/// scalar-only simple path followed by one `letter` edge.
///
/// This is the brute-force counterpart of the closure-based construction;
/// [`fuzzify`] must agree with the join of `φ*` over these words.
pub fn minimal_words(
    aut: &CrispAutomaton,
    from: StateId,
    letter: char,
    to: StateId,
) -> BTreeSet<Vec<PositionSymbol>> {
    let mut collected: BTreeSet<Vec<PositionSymbol>> = BTreeSet::new();
    let mut prefix: Vec<PositionSymbol> = Vec::new();
    let mut visited: BTreeSet<StateId> = BTreeSet::from([from]);

    fn explore(
        aut: &CrispAutomaton,
        letter: char,
        to: StateId,
        at: StateId,
        prefix: &mut Vec<PositionSymbol>,
        visited: &mut BTreeSet<StateId>,
        collected: &mut BTreeSet<Vec<PositionSymbol>>,
    ) {
        for (f, symbol, t) in aut.transitions() {
            if *f != at {
                continue;
            }
            match symbol {
                PositionSymbol::Letter(c) if *c == letter && *t == to => {
                    let mut word = prefix.clone();
                    word.push(symbol.clone());
                    collected.insert(word);
                }
                PositionSymbol::Scalar(_) if !visited.contains(t) => {
                    visited.insert(*t);
                    prefix.push(symbol.clone());
                    explore(aut, letter, to, *t, prefix, visited, collected);
                    prefix.pop();
                    visited.remove(t);
                }
                _ => {}
            }
        }
    }

    explore(
        aut,
        letter,
        to,
        from,
        &mut prefix,
        &mut visited,
        &mut collected,
    );

    collected
        .iter()
        .filter(|word| {
            !collected
                .iter()
                .any(|other| other != *word && is_subword(other, word))
        })
        .cloned()
        .collect()
}
