//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ('^' uint)*
//! primary := rational | var | '(' expr ')'
//! rational := int | int '/' uint
//! ```
//!
//! The result is the fully expanded canonical [`Polynomial`]; printing it
//! with [`Polynomial::to_expression`] and re-parsing is a fixed point.

use crate::poly::Polynomial;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// Exponents above this are rejected rather than expanded.
const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    /// A letter other than the declared variable.
    UnknownSymbol(char),
    /// `^` not followed by a plain nonnegative integer (or one too large).
    BadExponent,
    ZeroDenominator,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "syntax error at position {}: unexpected {c:?}", self.position)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "syntax error at position {}: unexpected end of input", self.position)
            }
            ParseErrorKind::UnknownSymbol(c) => {
                write!(f, "unknown symbol {c:?} at position {}", self.position)
            }
            ParseErrorKind::BadExponent => write!(
                f,
                "exponent at position {} must be a nonnegative integer below {MAX_EXPONENT}",
                self.position
            ),
            ParseErrorKind::ZeroDenominator => {
                write!(f, "zero denominator at position {}", self.position)
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses `text` as a polynomial in the single variable `var`.
pub fn parse_polynomial(text: &str, var: char) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        var,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(poly),
        Some(c) => Err(parser.error_here(ParseErrorKind::UnexpectedChar(c))),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    var: char,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos + 1,
            kind,
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        let mut negate = false;
        if let Some(sign @ ('+' | '-')) = self.peek() {
            self.bump();
            negate = sign == '-';
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc + &rhs;
                }
                Some('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = &acc - &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                let rhs = self.factor()?;
                acc = &acc * &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let mut base = self.primary()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('^') {
                self.bump();
                let exponent = self.exponent()?;
                base = power(&base, exponent);
            } else {
                return Ok(base);
            }
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error_here(ParseErrorKind::UnexpectedEnd)),
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        Ok(inner)
                    }
                    Some(c) => Err(self.error_here(ParseErrorKind::UnexpectedChar(c))),
                    None => Err(self.error_here(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(c) if c == self.var => {
                self.bump();
                Ok(Polynomial::variable())
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.rational()?;
                Ok(Polynomial::constant(value))
            }
            Some(c) if c.is_alphabetic() => Err(self.error_here(ParseErrorKind::UnknownSymbol(c))),
            Some(c) => Err(self.error_here(ParseErrorKind::UnexpectedChar(c))),
        }
    }

    /// An unsigned integer literal; signs are handled at the `expr` level.
    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let mut digits = String::new();
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            digits.push(self.bump().unwrap());
        }
        if digits.is_empty() {
            return match self.peek() {
                Some(c) => Err(self.error_here(ParseErrorKind::UnexpectedChar(c))),
                None => Err(self.error_here(ParseErrorKind::UnexpectedEnd)),
            };
        }
        Ok(digits.parse().expect("digit string parses as an integer"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let denom_pos = self.pos;
            let denom = self.integer()?;
            if denom.is_zero() {
                return Err(ParseError {
                    position: denom_pos + 1,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error_here(ParseErrorKind::BadExponent));
        }
        let digits = self.integer().expect("digit is present");
        match usize::try_from(&digits) {
            Ok(e) if e <= MAX_EXPONENT => Ok(e),
            _ => Err(ParseError {
                position: start + 1,
                kind: ParseErrorKind::BadExponent,
            }),
        }
    }
}

fn power(base: &Polynomial, exponent: usize) -> Polynomial {
    let mut acc = Polynomial::one();
    for _ in 0..exponent {
        acc = &acc * base;
    }
    acc
}
