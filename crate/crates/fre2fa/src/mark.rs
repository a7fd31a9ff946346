//! Marking: position numbering over the working alphabet `Σ ∪ Y`.
//!
//! Every scalar multiplication `λ r` is desugared into a fresh scalar
//! symbol concatenated in front of `r`, so scalars become ordinary
//! letter occurrences. All occurrences — letters and scalars alike — are
//! then numbered `1..n` left to right. The homomorphism `φ` sends letter
//! positions to 1 and scalar positions to their value; the weight of a
//! path is the `⊗`-product of `φ` along it.
//!
//! For `0.2((0.1(ab)*)*+b)` the marked expression is
//! `y₁((y₂(a₃b₄)*)*+b₅)` with `φ = {1↦0.2, 2↦0.1, 3↦1, 4↦1, 5↦1}`.

use std::fmt;

use thiserror::Error;

use crate::ast::FuzzyRegex;
use crate::lattice::{Structure, TruthValue};

/// A 1-based occurrence index; 0 is reserved for the initial-state marker
/// in the automata built from a marking.
pub type Position = usize;

/// A letter of the working alphabet `Σ ∪ Y`.
///
/// Scalar symbols are identified by their value: two occurrences of the
/// same scalar are occurrences of the same `Y`-letter (they still get
/// distinct positions).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PositionSymbol {
    /// A declared alphabet letter; `φ` maps it to 1.
    Letter(char),
    /// A scalar symbol; `φ` maps it to its value.
    Scalar(TruthValue),
}

impl PositionSymbol {
    /// The homomorphism `φ` on one symbol.
    pub fn phi(&self) -> TruthValue {
        match self {
            PositionSymbol::Letter(_) => TruthValue::one(),
            PositionSymbol::Scalar(v) => v.clone(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, PositionSymbol::Scalar(_))
    }

    pub fn as_letter(&self) -> Option<char> {
        match self {
            PositionSymbol::Letter(c) => Some(*c),
            PositionSymbol::Scalar(_) => None,
        }
    }
}

impl fmt::Display for PositionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositionSymbol::Letter(c) => write!(f, "{c}"),
            PositionSymbol::Scalar(v) => write!(f, "{v}"),
        }
    }
}

/// The desugared expression tree over positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkedNode {
    Empty,
    Epsilon,
    Pos(Position),
    Union(Box<MarkedNode>, Box<MarkedNode>),
    Concat(Box<MarkedNode>, Box<MarkedNode>),
    Star(Box<MarkedNode>),
}

/// A position-numbered expression over `Σ ∪ Y` together with `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedExpression {
    root: MarkedNode,
    /// `symbols[p - 1]` is the symbol at position `p`.
    symbols: Vec<PositionSymbol>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkError {
    #[error("unknown position {0}")]
    UnknownPosition(Position),
}

impl MarkedExpression {
    /// The desugared tree, with scalar multiplications turned into
    /// scalar-symbol positions.
    pub fn root(&self) -> &MarkedNode {
        &self.root
    }

    /// `n`: the number of letter and scalar occurrences.
    pub fn position_count(&self) -> usize {
        self.symbols.len()
    }

    /// The symbol occupying `position`.
    pub fn symbol(&self, position: Position) -> Result<&PositionSymbol, MarkError> {
        if position == 0 || position > self.symbols.len() {
            return Err(MarkError::UnknownPosition(position));
        }
        Ok(&self.symbols[position - 1])
    }

    /// `(position, symbol)` pairs in order.
    pub fn positions(&self) -> impl Iterator<Item = (Position, &PositionSymbol)> {
        self.symbols.iter().enumerate().map(|(i, s)| (i + 1, s))
    }

    /// The homomorphism `φ` at one position: 1 on letters, the value on
    /// scalar symbols.
    pub fn phi(&self, position: Position) -> Result<TruthValue, MarkError> {
        Ok(self.symbol(position)?.phi())
    }

    /// `φ*`: the `⊗`-product of `φ` along a word of positions. The empty
    /// word yields the tensor identity.
    pub fn phi_star(
        &self,
        structure: Structure,
        word: &[Position],
    ) -> Result<TruthValue, MarkError> {
        let mut acc = structure.identity();
        for &p in word {
            acc = structure.tensor(&acc, &self.phi(p)?);
        }
        Ok(acc)
    }

    /// Erases the marking: positions back to letters, scalar symbols back
    /// to scalar multiplications. Inverse of [`mark`].
    pub fn unmark(&self) -> FuzzyRegex {
        self.unmark_node(&self.root)
    }

    fn unmark_node(&self, node: &MarkedNode) -> FuzzyRegex {
        match node {
            MarkedNode::Empty => FuzzyRegex::Empty,
            MarkedNode::Epsilon => FuzzyRegex::Epsilon,
            MarkedNode::Pos(p) => match &self.symbols[p - 1] {
                PositionSymbol::Letter(c) => FuzzyRegex::Sym(*c),
                PositionSymbol::Scalar(v) => {
                    // a bare scalar position only arises from desugaring,
                    // which always pairs it with a right sibling
                    unreachable!("scalar position {p} ({v}) outside a desugared concat")
                }
            },
            MarkedNode::Union(l, r) => {
                FuzzyRegex::union(self.unmark_node(l), self.unmark_node(r))
            }
            MarkedNode::Concat(l, r) => {
                if let MarkedNode::Pos(p) = **l {
                    if let PositionSymbol::Scalar(v) = &self.symbols[p - 1] {
                        return FuzzyRegex::scale(v.clone(), self.unmark_node(r));
                    }
                }
                FuzzyRegex::concat(self.unmark_node(l), self.unmark_node(r))
            }
            MarkedNode::Star(inner) => FuzzyRegex::star(self.unmark_node(inner)),
        }
    }
}

/// Desugars scalars into scalar-symbol positions and numbers all
/// occurrences `1..n` left to right.
pub fn mark(expr: &FuzzyRegex) -> MarkedExpression {
    fn go(expr: &FuzzyRegex, symbols: &mut Vec<PositionSymbol>) -> MarkedNode {
        match expr {
            FuzzyRegex::Empty => MarkedNode::Empty,
            FuzzyRegex::Epsilon => MarkedNode::Epsilon,
            FuzzyRegex::Sym(c) => {
                symbols.push(PositionSymbol::Letter(*c));
                MarkedNode::Pos(symbols.len())
            }
            FuzzyRegex::Scale(v, inner) => {
                symbols.push(PositionSymbol::Scalar(v.clone()));
                let scalar = MarkedNode::Pos(symbols.len());
                let rest = go(inner, symbols);
                MarkedNode::Concat(Box::new(scalar), Box::new(rest))
            }
            FuzzyRegex::Union(l, r) => {
                let left = go(l, symbols);
                let right = go(r, symbols);
                MarkedNode::Union(Box::new(left), Box::new(right))
            }
            FuzzyRegex::Concat(l, r) => {
                let left = go(l, symbols);
                let right = go(r, symbols);
                MarkedNode::Concat(Box::new(left), Box::new(right))
            }
            FuzzyRegex::Star(inner) => MarkedNode::Star(Box::new(go(inner, symbols))),
        }
    }
    let mut symbols = Vec::new();
    let root = go(expr, &mut symbols);
    MarkedExpression { root, symbols }
}
