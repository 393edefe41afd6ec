//! Text notation for Dirichlet polynomials.
//!
//! ```text
//! expr := term ('+' term)*
//! term := atom ('*' atom)*
//! atom := NAT | NAT '^' 'y' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. A bare natural `k` denotes `k·1^y`, so `0`
//! is the zero polynomial while `0^y` is the exponential with base zero.
//! Printing lists terms by descending base as `a*n^y`, omitting a unit
//! coefficient and writing base-one terms as their coefficient.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::poly::DirPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Character offset into the input.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character or word outside the grammar.
    BadToken(String),
    /// `^` followed by something other than `y`.
    BadExponent(String),
    /// A complete expression followed by more input.
    TrailingInput(String),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::BadToken(t) => write!(f, "unrecognised token `{t}`"),
            ParseErrorKind::BadExponent(t) => {
                write!(f, "exponent must be `y`, found `{t}`")
            }
            ParseErrorKind::TrailingInput(t) => write!(f, "unexpected trailing input `{t}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigUint),
    Word(String),
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Nat(n) => write!(f, "{n}"),
            Tok::Word(w) => f.write_str(w),
            Tok::Plus => f.write_str("+"),
            Tok::Star => f.write_str("*"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Tok::Nat(digits.parse().expect("ascii digits"))
            }
            c if c.is_alphabetic() || c == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Tok::Word(chars[start..=i].iter().collect())
            }
            c => {
                return Err(ParseError {
                    kind: ParseErrorKind::BadToken(c.to_string()),
                    position: start,
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(o, _)| *o)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.offset(),
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            None => self.error(ParseErrorKind::UnexpectedEnd { expected }),
            Some(Tok::Word(w)) if w != "y" => self.error(ParseErrorKind::BadToken(w.clone())),
            Some(t) => self.error(ParseErrorKind::UnexpectedToken {
                found: t.to_string(),
                expected,
            }),
        }
    }

    fn expr(&mut self) -> Result<DirPoly, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            acc = acc + self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DirPoly, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc * self.atom()?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<DirPoly, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                if self.peek() != Some(&Tok::Caret) {
                    return Ok(DirPoly::constant(n));
                }
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Word(w)) if w == "y" => {
                        self.pos += 1;
                        Ok(DirPoly::exponential(n))
                    }
                    Some(t) => Err(self.error(ParseErrorKind::BadExponent(t.to_string()))),
                    None => Err(self.error(ParseErrorKind::UnexpectedEnd {
                        expected: "exponent `y`",
                    })),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected("a natural number or `(`")),
        }
    }
}

/// Parses and expands an expression into canonical form.
pub fn parse(input: &str) -> Result<DirPoly, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        len: input.chars().count(),
    };
    let d = parser.expr()?;
    match parser.peek() {
        None => Ok(d),
        Some(Tok::Word(w)) if w != "y" => Err(parser.error(ParseErrorKind::BadToken(w.clone()))),
        Some(t) => Err(parser.error(ParseErrorKind::TrailingInput(t.to_string()))),
    }
}

impl FromStr for DirPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl fmt::Display for DirPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (base, coefficient)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if base.is_one() {
                write!(f, "{coefficient}")?;
            } else if coefficient.is_one() {
                write!(f, "{base}^y")?;
            } else {
                write!(f, "{coefficient}*{base}^y")?;
            }
        }
        Ok(())
    }
}

/// Canonical text of `d`; the inverse of [`parse`].
pub fn print(d: &DirPoly) -> String {
    d.to_string()
}
