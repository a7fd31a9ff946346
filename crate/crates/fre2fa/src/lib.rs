//! Compile fuzzy regular expressions into fuzzy finite automata.
//!
//! A fuzzy regular expression is an ordinary regular expression extended
//! with scalar multiplication by truth values drawn from an integral
//! lattice-ordered monoid; it denotes a fuzzy language assigning every
//! word a degree in `[0, 1]`. This crate compiles such expressions into
//! fuzzy automata by way of the follow automaton — the quotient of the
//! position (Glushkov) automaton by equal follow sets — which never has
//! more states than the position route and often has fewer.
//!
//! The pipeline:
//!
//! 1. [`parser::parse`] text into a [`FuzzyRegex`],
//! 2. [`mark::mark`] it: scalars become fresh symbol positions,
//! 3. [`glushkov::position_sets`] + [`glushkov::build_position_automaton`]
//!    give the crisp position automaton over letters and scalar symbols,
//! 4. [`glushkov::follow_quotient`] merges states with equal follow sets,
//! 5. [`fuzzy::fuzzify`] eliminates scalar symbols into weights.
//!
//! [`semantics::denote`] evaluates the expression's language directly and
//! serves as the ground truth; [`equivalence::check_equivalence`] compares
//! all three routes word by word with exact rational arithmetic.
//!
//! ```
//! use fre2fa::{compile, Method, Structure};
//! use fre2fa::parser::parse_inferring;
//!
//! let (expr, sigma) = parse_inferring("0.2((0.1(ab)*)*+b)").unwrap();
//! let fa = compile(&expr, &sigma, Method::Follow, Structure::Goedel);
//! assert_eq!(fa.state_count(), 5);
//! assert_eq!(fa.eval("b").unwrap().to_string(), "0.2");
//! ```
//!
//! The `examples/` directory walks through every major capability; the
//! thin `fre2fa` binary exposes the same pipeline as subcommands.

pub mod ast;
pub mod cli;
pub mod document;
pub mod dot;
pub mod equivalence;
pub mod fuzzy;
pub mod generator;
pub mod glushkov;
pub mod lattice;
pub mod mark;
pub mod parser;
pub mod semantics;

pub use ast::{Alphabet, FuzzyRegex};
pub use equivalence::{check_equivalence, EquivalenceReport, Verdict, DEFAULT_WORD_BUDGET};
pub use fuzzy::{fuzzify, FuzzyAutomaton};
pub use glushkov::{build_position_automaton, follow_quotient, position_sets, CrispAutomaton};
pub use lattice::{Structure, TruthValue};
pub use mark::{mark, MarkedExpression};
pub use semantics::denote;

/// Which crisp automaton the scalar elimination runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The follow quotient: at most `n + 1` states.
    Follow,
    /// The raw position automaton: exactly `n + 1` states.
    Position,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Follow => "follow",
            Method::Position => "position",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        match name {
            "follow" => Some(Method::Follow),
            "position" => Some(Method::Position),
            _ => None,
        }
    }
}

/// Runs the whole pipeline on an already-parsed expression.
pub fn compile(
    expr: &FuzzyRegex,
    sigma: &Alphabet,
    method: Method,
    structure: Structure,
) -> FuzzyAutomaton {
    let (_, crisp) = compile_crisp(expr, method);
    fuzzy::fuzzify(&crisp, sigma.iter(), structure)
        .expect("every provided structure is integral")
}

/// Runs the crisp half of the pipeline, returning the marking alongside
/// the chosen crisp automaton over letters and scalar symbols.
pub fn compile_crisp(expr: &FuzzyRegex, method: Method) -> (MarkedExpression, CrispAutomaton) {
    let marked = mark(expr);
    let sets = position_sets(&marked);
    let position = build_position_automaton(&marked, &sets);
    let automaton = match method {
        Method::Position => position,
        Method::Follow => follow_quotient(&position, &sets),
    };
    (marked, automaton)
}

#[cfg(test)]
mod tests {
    use super::*;
    use parser::parse_inferring;

    #[test]
    fn compile_routes_differ_only_in_state_count() {
        let (expr, sigma) = parse_inferring("0.2((0.1(ab)*)*+b)").unwrap();
        let follow = compile(&expr, &sigma, Method::Follow, Structure::Goedel);
        let position = compile(&expr, &sigma, Method::Position, Structure::Goedel);
        assert_eq!(follow.state_count(), 5);
        assert_eq!(position.state_count(), 6);
        for word in ["", "b", "ab", "abab", "aab"] {
            assert_eq!(follow.eval(word).unwrap(), position.eval(word).unwrap());
        }
    }
}
