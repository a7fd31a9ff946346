//! The JSON interchange document for crisp and fuzzy automata.
//!
//! Weights are exact-value strings (`0.2`, `1/3`), never binary floats,
//! so a document round-trips losslessly. Transition lists are emitted in
//! a fixed sort order, making serialization deterministic.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::{FuzzyAutomaton, Matrix};
use crate::glushkov::CrispAutomaton;
use crate::lattice::{Structure, TruthValue};
use crate::mark::PositionSymbol;

/// The schema version this crate reads and writes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),
    #[error("expected a {expected} document, got {actual}")]
    WrongKind { expected: String, actual: String },
    #[error("bad symbol `{0}`: expected a letter or an exact scalar")]
    BadSymbol(String),
    #[error("inconsistent document: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutomatonKind {
    Crisp,
    Fuzzy,
}

impl std::fmt::Display for AutomatonKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AutomatonKind::Crisp => "crisp",
            AutomatonKind::Fuzzy => "fuzzy",
        })
    }
}

/// Crisp automata have a single initial state id; fuzzy automata carry the
/// whole fuzzy initial vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Initial {
    Id(usize),
    Vector(Vec<TruthValue>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionRecord {
    pub from: usize,
    pub symbol: String,
    pub to: usize,
    pub weight: TruthValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinalRecord {
    pub state: usize,
    pub weight: TruthValue,
}

/// One automaton, crisp or fuzzy, as written to and read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub format_version: u32,
    pub structure: Structure,
    pub kind: AutomatonKind,
    pub alphabet: Vec<String>,
    pub states: usize,
    pub initial: Initial,
    pub transitions: Vec<TransitionRecord>,
    pub finals: Vec<FinalRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<usize, Vec<usize>>>,
}

impl AutomatonDocument {
    /// Snapshot of a crisp automaton; every transition and final weighs 1.
    pub fn from_crisp(aut: &CrispAutomaton, structure: Structure) -> Self {
        let transitions = aut
            .transitions()
            .map(|(from, symbol, to)| TransitionRecord {
                from: *from,
                symbol: symbol.to_string(),
                to: *to,
                weight: TruthValue::one(),
            })
            .collect();
        let finals = aut
            .finals()
            .iter()
            .map(|&state| FinalRecord {
                state,
                weight: TruthValue::one(),
            })
            .collect();
        let labels = (0..aut.state_count())
            .map(|s| (s, aut.label(s).iter().copied().collect()))
            .collect();
        AutomatonDocument {
            format_version: FORMAT_VERSION,
            structure,
            kind: AutomatonKind::Crisp,
            alphabet: aut.alphabet().iter().map(|s| s.to_string()).collect(),
            states: aut.state_count(),
            initial: Initial::Id(aut.initial()),
            transitions,
            finals,
            labels: Some(labels),
        }
    }

    /// Snapshot of a fuzzy automaton; only nonzero entries are listed.
    pub fn from_fuzzy(fa: &FuzzyAutomaton) -> Self {
        let mut transitions = Vec::new();
        for &symbol in fa.alphabet() {
            let matrix = fa.transition(symbol).expect("alphabet letter");
            for from in 0..fa.state_count() {
                for to in 0..fa.state_count() {
                    let weight = matrix.get(from, to);
                    if !weight.is_zero() {
                        transitions.push(TransitionRecord {
                            from,
                            symbol: symbol.to_string(),
                            to,
                            weight: weight.clone(),
                        });
                    }
                }
            }
        }
        transitions.sort_by(|a, b| {
            (a.from, &a.symbol, a.to).cmp(&(b.from, &b.symbol, b.to))
        });
        let finals = fa
            .tau()
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(state, weight)| FinalRecord {
                state,
                weight: weight.clone(),
            })
            .collect();
        AutomatonDocument {
            format_version: FORMAT_VERSION,
            structure: fa.structure(),
            kind: AutomatonKind::Fuzzy,
            alphabet: fa.alphabet().iter().map(|c| c.to_string()).collect(),
            states: fa.state_count(),
            initial: Initial::Vector(fa.sigma().to_vec()),
            transitions,
            finals,
            labels: None,
        }
    }

    fn check_version(&self) -> Result<(), DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion(self.format_version));
        }
        Ok(())
    }

    fn check_state(&self, state: usize) -> Result<(), DocumentError> {
        if state >= self.states {
            return Err(DocumentError::Inconsistent(format!(
                "state {state} out of range for {} states",
                self.states
            )));
        }
        Ok(())
    }

    /// Rebuilds the fuzzy automaton a `kind: fuzzy` document describes.
    pub fn to_fuzzy(&self) -> Result<FuzzyAutomaton, DocumentError> {
        self.check_version()?;
        let sigma = match (&self.kind, &self.initial) {
            (AutomatonKind::Fuzzy, Initial::Vector(v)) => v.clone(),
            (AutomatonKind::Fuzzy, Initial::Id(_)) => {
                return Err(DocumentError::Inconsistent(
                    "a fuzzy document needs an initial vector".into(),
                ))
            }
            (kind, _) => {
                return Err(DocumentError::WrongKind {
                    expected: "fuzzy".into(),
                    actual: kind.to_string(),
                })
            }
        };
        if sigma.len() != self.states {
            return Err(DocumentError::Inconsistent(format!(
                "initial vector has {} entries for {} states",
                sigma.len(),
                self.states
            )));
        }
        let mut alphabet = BTreeSet::new();
        for symbol in &self.alphabet {
            alphabet.insert(parse_letter(symbol)?);
        }
        let mut delta: BTreeMap<char, Matrix> = alphabet
            .iter()
            .map(|&c| (c, Matrix::zeros(self.states)))
            .collect();
        for t in &self.transitions {
            self.check_state(t.from)?;
            self.check_state(t.to)?;
            let letter = parse_letter(&t.symbol)?;
            let matrix = delta
                .get_mut(&letter)
                .ok_or_else(|| DocumentError::BadSymbol(t.symbol.clone()))?;
            matrix.set(t.from, t.to, t.weight.clone());
        }
        let mut tau = vec![TruthValue::zero(); self.states];
        for f in &self.finals {
            self.check_state(f.state)?;
            tau[f.state] = f.weight.clone();
        }
        FuzzyAutomaton::new(self.structure, alphabet, delta, sigma, tau)
            .map_err(|e| DocumentError::Inconsistent(e.to_string()))
    }

    /// Rebuilds the crisp automaton a `kind: crisp` document describes.
    pub fn to_crisp(&self) -> Result<CrispAutomaton, DocumentError> {
        self.check_version()?;
        if self.kind != AutomatonKind::Crisp {
            return Err(DocumentError::WrongKind {
                expected: "crisp".into(),
                actual: self.kind.to_string(),
            });
        }
        let mut transitions = BTreeSet::new();
        for t in &self.transitions {
            self.check_state(t.from)?;
            self.check_state(t.to)?;
            transitions.insert((t.from, parse_symbol(&t.symbol)?, t.to));
        }
        let mut finals = BTreeSet::new();
        for f in &self.finals {
            self.check_state(f.state)?;
            finals.insert(f.state);
        }
        let labels = match &self.labels {
            Some(map) => (0..self.states)
                .map(|s| map.get(&s).map(|v| v.iter().copied().collect()).unwrap_or_default())
                .collect(),
            None => (0..self.states).map(|s| BTreeSet::from([s])).collect(),
        };
        Ok(CrispAutomaton::new(self.states, transitions, finals, labels))
    }

    /// Canonical pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn parse_letter(symbol: &str) -> Result<char, DocumentError> {
    let mut chars = symbol.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_alphanumeric() => Ok(c),
        _ => Err(DocumentError::BadSymbol(symbol.to_string())),
    }
}

fn parse_symbol(symbol: &str) -> Result<PositionSymbol, DocumentError> {
    if symbol.len() == 1 && symbol.chars().all(|c| c.is_ascii_lowercase()) {
        return Ok(PositionSymbol::Letter(symbol.chars().next().unwrap()));
    }
    symbol
        .parse::<TruthValue>()
        .map(PositionSymbol::Scalar)
        .map_err(|_| DocumentError::BadSymbol(symbol.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_inferring;
    use crate::{compile, compile_crisp, Method};

    fn sample_fuzzy() -> FuzzyAutomaton {
        let (expr, sigma) = parse_inferring("0.2((0.1(ab)*)*+b)").unwrap();
        compile(&expr, &sigma, Method::Follow, Structure::Goedel)
    }

    #[test]
    fn fuzzy_document_round_trips() {
        let doc = AutomatonDocument::from_fuzzy(&sample_fuzzy());
        let json = doc.to_json();
        let back = AutomatonDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_fuzzy().unwrap(), sample_fuzzy());
    }

    #[test]
    fn crisp_document_round_trips() {
        let (expr, _) = parse_inferring("0.2((0.1(ab)*)*+b)").unwrap();
        let (_, crisp) = compile_crisp(&expr, Method::Follow);
        let doc = AutomatonDocument::from_crisp(&crisp, Structure::Goedel);
        let back = AutomatonDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_crisp().unwrap(), crisp);
    }

    #[test]
    fn fuzzy_weights_serialize_exactly() {
        let doc = AutomatonDocument::from_fuzzy(&sample_fuzzy());
        let json = doc.to_json();
        assert!(json.contains("\"0.2\""), "{json}");
        assert!(json.contains("\"0.1\""), "{json}");
        assert!(!json.contains("0.30000000000000004"));
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let doc = AutomatonDocument::from_fuzzy(&sample_fuzzy());
        assert!(matches!(doc.to_crisp(), Err(DocumentError::WrongKind { .. })));
        let (expr, _) = parse_inferring("ab").unwrap();
        let (_, crisp) = compile_crisp(&expr, Method::Position);
        let doc = AutomatonDocument::from_crisp(&crisp, Structure::Goedel);
        assert!(matches!(doc.to_fuzzy(), Err(DocumentError::WrongKind { .. })));
    }

    #[test]
    fn version_gate() {
        let mut doc = AutomatonDocument::from_fuzzy(&sample_fuzzy());
        doc.format_version = 2;
        assert!(matches!(
            doc.to_fuzzy(),
            Err(DocumentError::UnsupportedVersion(2))
        ));
    }
}
