//! The fuzzy-regular-expression AST and its concrete text form.
//!
//! Expressions are built from `∅`, `ε`, single letters, scalar
//! multiplication by a [`TruthValue`], union, concatenation, and star.
//! [`Display`](fmt::Display) renders the canonical text form with minimal
//! parentheses; [`crate::parser::parse`] inverts it structurally.

use std::collections::BTreeSet;
use std::fmt;

use crate::lattice::TruthValue;

/// The declared finite alphabet `Σ`: single lowercase ASCII letters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Alphabet(BTreeSet<char>);

impl Alphabet {
    /// Builds an alphabet, rejecting anything but lowercase ASCII letters.
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self, char> {
        let mut set = BTreeSet::new();
        for c in letters {
            if !c.is_ascii_lowercase() {
                return Err(c);
            }
            set.insert(c);
        }
        Ok(Alphabet(set))
    }

    /// The first `n` letters `a, b, c, …` (at most 26).
    pub fn first_n(n: usize) -> Self {
        Alphabet(('a'..='z').take(n).collect())
    }

    pub fn contains(&self, c: char) -> bool {
        self.0.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A fuzzy regular expression over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuzzyRegex {
    /// `∅` — denotes the constant-0 language.
    Empty,
    /// `ε` — the empty word with degree 1.
    Epsilon,
    /// A single alphabet letter.
    Sym(char),
    /// Scalar multiplication `λ r`.
    Scale(TruthValue, Box<FuzzyRegex>),
    /// Union `r + s`.
    Union(Box<FuzzyRegex>, Box<FuzzyRegex>),
    /// Concatenation `r s`.
    Concat(Box<FuzzyRegex>, Box<FuzzyRegex>),
    /// Kleene closure `r*`.
    Star(Box<FuzzyRegex>),
}

impl FuzzyRegex {
    pub fn sym(c: char) -> Self {
        FuzzyRegex::Sym(c)
    }

    pub fn scale(value: TruthValue, inner: FuzzyRegex) -> Self {
        FuzzyRegex::Scale(value, Box::new(inner))
    }

    pub fn union(left: FuzzyRegex, right: FuzzyRegex) -> Self {
        FuzzyRegex::Union(Box::new(left), Box::new(right))
    }

    pub fn concat(left: FuzzyRegex, right: FuzzyRegex) -> Self {
        FuzzyRegex::Concat(Box::new(left), Box::new(right))
    }

    pub fn star(inner: FuzzyRegex) -> Self {
        FuzzyRegex::Star(Box::new(inner))
    }

    /// Nested prefix dump, e.g. `scale(1/5, union(star(...), sym(b)))`.
    pub fn dump(&self) -> String {
        fn scalar(v: &TruthValue) -> String {
            let r = v.as_ratio();
            if r.denom() == &num_bigint::BigInt::from(1) {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        match self {
            FuzzyRegex::Empty => "empty".into(),
            FuzzyRegex::Epsilon => "eps".into(),
            FuzzyRegex::Sym(c) => format!("sym({c})"),
            FuzzyRegex::Scale(v, r) => format!("scale({}, {})", scalar(v), r.dump()),
            FuzzyRegex::Union(l, r) => format!("union({}, {})", l.dump(), r.dump()),
            FuzzyRegex::Concat(l, r) => format!("concat({}, {})", l.dump(), r.dump()),
            FuzzyRegex::Star(r) => format!("star({})", r.dump()),
        }
    }
}

/// Binding strength in the concrete grammar; used to place parentheses.
fn precedence(r: &FuzzyRegex) -> u8 {
    match r {
        FuzzyRegex::Union(..) => 1,
        FuzzyRegex::Concat(..) => 2,
        FuzzyRegex::Scale(..) => 3,
        FuzzyRegex::Star(..) => 4,
        FuzzyRegex::Empty | FuzzyRegex::Epsilon | FuzzyRegex::Sym(_) => 5,
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, r: &FuzzyRegex, min_prec: u8) -> fmt::Result {
    if precedence(r) < min_prec {
        write!(f, "(")?;
        write_expr(f, r, 0)?;
        return write!(f, ")");
    }
    match r {
        FuzzyRegex::Empty => write!(f, "@null"),
        FuzzyRegex::Epsilon => write!(f, "@eps"),
        FuzzyRegex::Sym(c) => write!(f, "{c}"),
        FuzzyRegex::Scale(v, inner) => {
            write!(f, "{v}")?;
            // a directly nested scalar would lex as one number; force parens
            let inner_min = if matches!(**inner, FuzzyRegex::Scale(..)) { 4 } else { 3 };
            write_expr(f, inner, inner_min)
        }
        FuzzyRegex::Union(l, rhs) => {
            write_expr(f, l, 1)?;
            write!(f, "+")?;
            write_expr(f, rhs, 2)
        }
        FuzzyRegex::Concat(l, rhs) => {
            write_expr(f, l, 2)?;
            write_expr(f, rhs, 3)
        }
        FuzzyRegex::Star(inner) => {
            write_expr(f, inner, 4)?;
            write!(f, "*")
        }
    }
}

impl fmt::Display for FuzzyRegex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(n: u64, d: u64) -> TruthValue {
        TruthValue::from_ratio(n, d).unwrap()
    }

    /// The running example used throughout the crate:
    /// `0.2((0.1(ab)*)*+b)`.
    pub(crate) fn sample_expr() -> FuzzyRegex {
        FuzzyRegex::scale(
            tv(1, 5),
            FuzzyRegex::union(
                FuzzyRegex::star(FuzzyRegex::scale(
                    tv(1, 10),
                    FuzzyRegex::star(FuzzyRegex::concat(
                        FuzzyRegex::sym('a'),
                        FuzzyRegex::sym('b'),
                    )),
                )),
                FuzzyRegex::sym('b'),
            ),
        )
    }

    #[test]
    fn render_simple() {
        assert_eq!(FuzzyRegex::scale(tv(1, 5), FuzzyRegex::sym('a')).to_string(), "0.2a");
        assert_eq!(
            FuzzyRegex::union(FuzzyRegex::sym('a'), FuzzyRegex::sym('b')).to_string(),
            "a+b"
        );
        assert_eq!(FuzzyRegex::Empty.to_string(), "@null");
        assert_eq!(FuzzyRegex::star(FuzzyRegex::Epsilon).to_string(), "@eps*");
    }

    #[test]
    fn render_sample() {
        assert_eq!(sample_expr().to_string(), "0.2((0.1(ab)*)*+b)");
    }

    #[test]
    fn render_disambiguates_associativity() {
        let a = FuzzyRegex::sym('a');
        let b = FuzzyRegex::sym('b');
        let c = FuzzyRegex::sym('c');
        let left = FuzzyRegex::union(FuzzyRegex::union(a.clone(), b.clone()), c.clone());
        let right = FuzzyRegex::union(a.clone(), FuzzyRegex::union(b.clone(), c.clone()));
        assert_eq!(left.to_string(), "a+b+c");
        assert_eq!(right.to_string(), "a+(b+c)");
        let cat_r = FuzzyRegex::concat(a.clone(), FuzzyRegex::concat(b.clone(), c.clone()));
        assert_eq!(cat_r.to_string(), "a(bc)");
    }

    #[test]
    fn render_nested_scalars_lex_safely() {
        let inner = FuzzyRegex::scale(tv(3, 10), FuzzyRegex::sym('a'));
        let outer = FuzzyRegex::scale(tv(1, 5), inner);
        assert_eq!(outer.to_string(), "0.2(0.3a)");
    }

    #[test]
    fn dump_is_prefix_notation() {
        assert_eq!(
            sample_expr().dump(),
            "scale(1/5, union(star(scale(1/10, star(concat(sym(a), sym(b))))), sym(b)))"
        );
    }
}
