//! Text syntax for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | VAR | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected: `2X` must be written `2*X`. Positions in errors
//! are byte offsets into the input.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{MPoly, Ring};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at {pos} for ring {ring}")]
    UnknownVariable { pos: usize, name: String, ring: Ring },
    #[error("zero denominator at {pos}")]
    ZeroDenominator { pos: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::Syntax { pos: start, msg: format!("unexpected character {ch:?}") });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    ring: Ring,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if t.1 != Tok::End {
            self.at += 1;
        }
        t
    }

    /// Undoes a `bump` that returned `tok`.
    fn unbump(&mut self, tok: &Tok) {
        if *tok != Tok::End {
            self.at -= 1;
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::Syntax { pos: self.pos(), msg: format!("expected {wanted}, found {}", describe(self.peek())) }
    }

    fn expr(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().1 {
            Tok::Int(n) => {
                let k = n.to_u32().ok_or_else(|| ParseError::Syntax { pos, msg: "exponent too large".into() })?;
                Ok(base.pow(k))
            }
            other => {
                self.unbump(&other);
                Err(self.unexpected("a nonnegative integer exponent"))
            }
        }
    }

    fn atom(&mut self) -> Result<MPoly, ParseError> {
        let (pos, tok) = self.bump();
        match tok {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump().1 {
                        Tok::Int(d) if d.is_zero() => Err(ParseError::ZeroDenominator { pos: dpos }),
                        Tok::Int(d) => Ok(MPoly::constant(self.ring, Rat::new(n, d))),
                        other => {
                            self.unbump(&other);
                            Err(self.unexpected("an integer denominator"))
                        }
                    }
                } else {
                    Ok(MPoly::constant(self.ring, Rat::from_integer(n)))
                }
            }
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => Ok(MPoly::var(self.ring, i)),
                None => Err(ParseError::UnknownVariable { pos, name, ring: self.ring }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            other => {
                self.unbump(&other);
                Err(self.unexpected("a number, variable or '('"))
            }
        }
    }
}

/// Parses `text` as a polynomial over `ring`.
pub fn parse_form(text: &str, ring: Ring) -> Result<MPoly, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    #[test]
    fn nested_biform() {
        let c = parse_form("X1*Y2^2 + Y1*X2^2", Ring::Bi).unwrap();
        assert_eq!(c.num_terms(), 2);
        assert_eq!(c.coeff(&[1, 0, 0, 2]), int(1));
        assert_eq!(c.coeff(&[0, 1, 2, 0]), int(1));
    }

    #[test]
    fn zero_literal() {
        assert!(parse_form("0", Ring::Binary).unwrap().is_zero());
        assert!(parse_form("X - X", Ring::Binary).unwrap().is_zero());
    }

    #[test]
    fn rational_literals() {
        let p = parse_form("3/7*X^2*Y - X*Y^2", Ring::Binary).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coeff(&[2, 1]), frac(3, 7));
        assert_eq!(p.coeff(&[1, 2]), int(-1));
    }

    #[test]
    fn precedence_and_unary_minus() {
        let b = Ring::Binary;
        assert_eq!(parse_form("-X^2", b).unwrap(), -&parse_form("X*X", b).unwrap());
        assert_eq!(parse_form("2*X^2 + 1", b).unwrap().coeff(&[2, 0]), int(2));
        assert_eq!(parse_form("(X+Y)^2", b).unwrap(), parse_form("X^2 + 2*X*Y + Y^2", b).unwrap());
        assert_eq!(parse_form("- - X", b).unwrap(), parse_form("X", b).unwrap());
        assert_eq!(parse_form("X - Y - X", b).unwrap(), parse_form("-Y", b).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let b = Ring::Binary;
        assert_eq!(parse_form("X + W", b), Err(ParseError::UnknownVariable { pos: 4, name: "W".into(), ring: b }));
        assert_eq!(
            parse_form("X1", b).unwrap_err(),
            ParseError::UnknownVariable { pos: 0, name: "X1".into(), ring: b }
        );
        assert_eq!(parse_form("3/0*X", b), Err(ParseError::ZeroDenominator { pos: 2 }));
        assert!(matches!(parse_form("2X", b), Err(ParseError::Syntax { pos: 1, .. })));
        assert!(matches!(parse_form("X +", b), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_form("(X", b), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_form("X^Y", b), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_form("X/2", b), Err(ParseError::Syntax { pos: 1, .. })));
        assert!(matches!(parse_form("X # Y", b), Err(ParseError::Syntax { pos: 2, .. })));
    }
}
