//! Recursive-descent parser for the expression grammar.
//!
//! ```text
//! union  := concat ('+' concat)*
//! concat := factor+
//! factor := NUMBER factor | base '*'*
//! base   := SYMBOL | '@eps' | '@null' | '(' union ')'
//! ```
//!
//! Symbols are single lowercase letters, `NUMBER` is `0`, `1`, or `0.`
//! followed by up to six digits, and whitespace is ignored. Star binds
//! tighter than scalar multiplication, which binds tighter than
//! juxtaposition (concatenation), which binds tighter than `+`. This makes
//! `0.1(ab)*` parse as the scalar `0.1` applied to `(ab)*`.

use thiserror::Error;

use crate::ast::{Alphabet, FuzzyRegex};
use crate::lattice::{NumberError, TruthValue};

/// Parse failures, with the character position they occurred at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },
    #[error("unknown symbol `{symbol}` at position {position}: not in the alphabet")]
    UnknownSymbol { position: usize, symbol: char },
    #[error("bad scalar at position {position}: {source}")]
    Number {
        position: usize,
        #[source]
        source: NumberError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Sym(char),
    Number(String),
    Plus,
    Star,
    LParen,
    RParen,
    Eps,
    Null,
    End,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Sym(c) => format!("symbol `{c}`"),
            TokenKind::Number(n) => format!("scalar `{n}`"),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Eps => "`@eps`".into(),
            TokenKind::Null => "`@null`".into(),
            TokenKind::End => "end of input".into(),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self,
            TokenKind::Sym(_)
                | TokenKind::Number(_)
                | TokenKind::LParen
                | TokenKind::Eps
                | TokenKind::Null
        )
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    position: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let position = i;
        let kind = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            'a'..='z' => {
                i += 1;
                TokenKind::Sym(c)
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len()
                    && chars[i] == '.'
                    && i + 1 < chars.len()
                    && chars[i + 1].is_ascii_digit()
                {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                TokenKind::Number(chars[start..i].iter().collect())
            }
            '+' => {
                i += 1;
                TokenKind::Plus
            }
            '*' => {
                i += 1;
                TokenKind::Star
            }
            '(' => {
                i += 1;
                TokenKind::LParen
            }
            ')' => {
                i += 1;
                TokenKind::RParen
            }
            '@' => {
                // keywords match longest-first, like letters they may be
                // followed immediately by another token ("@epsb" is ε·b)
                let rest: String = chars[i..].iter().take(5).collect();
                if rest.starts_with("@null") {
                    i += 5;
                    TokenKind::Null
                } else if rest.starts_with("@eps") {
                    i += 4;
                    TokenKind::Eps
                } else {
                    let word: String = chars[i..]
                        .iter()
                        .take_while(|c| **c == '@' || c.is_ascii_alphabetic())
                        .collect();
                    return Err(ParseError::Syntax {
                        position,
                        expected: "`@eps` or `@null`".into(),
                        found: format!("`{word}`"),
                    });
                }
            }
            _ => {
                return Err(ParseError::Syntax {
                    position,
                    expected: "a symbol, a scalar, `+`, `*`, `(`, `)`, `@eps`, or `@null`".into(),
                    found: format!("`{c}`"),
                })
            }
        };
        tokens.push(Token { kind, position });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        position: chars.len(),
    });
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    cursor: usize,
    sigma: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.cursor]
    }

    fn advance(&mut self) -> Token {
        let tok = self.tokens[self.cursor].clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        tok
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let tok = self.peek();
        ParseError::Syntax {
            position: tok.position,
            expected: expected.into(),
            found: tok.kind.describe(),
        }
    }

    fn union(&mut self) -> Result<FuzzyRegex, ParseError> {
        let mut node = self.concat()?;
        while self.peek().kind == TokenKind::Plus {
            self.advance();
            let rhs = self.concat()?;
            node = FuzzyRegex::union(node, rhs);
        }
        Ok(node)
    }

    fn concat(&mut self) -> Result<FuzzyRegex, ParseError> {
        let mut node = self.factor()?;
        while self.peek().kind.starts_factor() {
            let rhs = self.factor()?;
            node = FuzzyRegex::concat(node, rhs);
        }
        Ok(node)
    }

    fn factor(&mut self) -> Result<FuzzyRegex, ParseError> {
        if let TokenKind::Number(text) = &self.peek().kind {
            let text = text.clone();
            let position = self.peek().position;
            self.advance();
            let value = TruthValue::parse_literal(&text)
                .map_err(|source| ParseError::Number { position, source })?;
            let inner = self.factor()?;
            return Ok(FuzzyRegex::scale(value, inner));
        }
        let mut node = self.base()?;
        while self.peek().kind == TokenKind::Star {
            self.advance();
            node = FuzzyRegex::star(node);
        }
        Ok(node)
    }

    fn base(&mut self) -> Result<FuzzyRegex, ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Sym(c) => {
                let position = self.peek().position;
                self.advance();
                if !self.sigma.contains(c) {
                    return Err(ParseError::UnknownSymbol {
                        position,
                        symbol: c,
                    });
                }
                Ok(FuzzyRegex::Sym(c))
            }
            TokenKind::Eps => {
                self.advance();
                Ok(FuzzyRegex::Epsilon)
            }
            TokenKind::Null => {
                self.advance();
                Ok(FuzzyRegex::Empty)
            }
            TokenKind::LParen => {
                self.advance();
                let node = self.union()?;
                if self.peek().kind != TokenKind::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.advance();
                Ok(node)
            }
            _ => Err(self.unexpected("a symbol, a scalar, `(`, `@eps`, or `@null`")),
        }
    }
}

/// Parses `text` against a declared alphabet.
pub fn parse(text: &str, sigma: &Alphabet) -> Result<FuzzyRegex, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        sigma,
    };
    let node = parser.union()?;
    if parser.peek().kind != TokenKind::End {
        return Err(parser.unexpected("end of input, `+`, `*`, or a factor"));
    }
    Ok(node)
}

/// Parses `text`, taking the alphabet to be exactly the letters that occur
/// in it. This is the CLI's reading of an expression.
pub fn parse_inferring(text: &str) -> Result<(FuzzyRegex, Alphabet), ParseError> {
    let tokens = lex(text)?;
    let letters: Vec<char> = tokens
        .iter()
        .filter_map(|t| match t.kind {
            TokenKind::Sym(c) => Some(c),
            _ => None,
        })
        .collect();
    let sigma = Alphabet::new(letters).expect("lexer only emits lowercase symbols");
    let expr = parse(text, &sigma)?;
    Ok((expr, sigma))
}
