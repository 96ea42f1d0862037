//! Expression grammar for rational maps, and the matching formatter.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' exponent)?
//! atom   := real | imaginary | 'i' | 'z' | '(' expr ')'
//! ```
//!
//! Reals use decimal or scientific notation; a real immediately followed
//! by `i` is an imaginary literal, so complex constants read `1+2i`. The
//! exponent is a nonnegative integer literal of at most 64. All arithmetic
//! happens on reduced rational maps, so a parsed map is always in
//! canonical form, and [`format_map`] prints a string that parses back to
//! the identical map.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::rational::RationalMap;

const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Imaginary(f64),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(position: usize, message: &str) -> Error {
    Error::Syntax { position, message: message.to_string() }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let start = pos;
        let ch = bytes[pos] as char;
        match ch {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                tokens.push((Token::Plus, start));
                pos += 1;
            }
            '-' => {
                tokens.push((Token::Minus, start));
                pos += 1;
            }
            '*' => {
                tokens.push((Token::Star, start));
                pos += 1;
            }
            '/' => {
                tokens.push((Token::Slash, start));
                pos += 1;
            }
            '^' => {
                tokens.push((Token::Caret, start));
                pos += 1;
            }
            '(' => {
                tokens.push((Token::LParen, start));
                pos += 1;
            }
            ')' => {
                tokens.push((Token::RParen, start));
                pos += 1;
            }
            'z' => {
                tokens.push((Token::Z, start));
                pos += 1;
            }
            'i' => {
                tokens.push((Token::Imaginary(1.0), start));
                pos += 1;
            }
            '0'..='9' | '.' => {
                let (value, next) = lex_number(text, pos)?;
                pos = next;
                if pos < bytes.len() && bytes[pos] == b'i' {
                    tokens.push((Token::Imaginary(value), start));
                    pos += 1;
                } else {
                    tokens.push((Token::Number(value), start));
                }
            }
            other => {
                return Err(syntax(start, &format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(tokens)
}

/// Lexes a real literal: digits with an optional decimal point and an
/// optional scientific exponent. Returns the value and the index just past
/// the literal.
fn lex_number(text: &str, start: usize) -> Result<(f64, usize)> {
    let bytes = text.as_bytes();
    let mut pos = start;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos < bytes.len() && bytes[pos] == b'.' {
        pos += 1;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
    }
    if pos == start || (pos == start + 1 && bytes[start] == b'.') {
        return Err(syntax(start, "malformed number"));
    }
    if pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
        let mut exp_end = pos + 1;
        if exp_end < bytes.len() && (bytes[exp_end] == b'+' || bytes[exp_end] == b'-') {
            exp_end += 1;
        }
        let digits_start = exp_end;
        while exp_end < bytes.len() && bytes[exp_end].is_ascii_digit() {
            exp_end += 1;
        }
        if exp_end == digits_start {
            return Err(syntax(pos, "malformed exponent in number"));
        }
        pos = exp_end;
    }
    text[start..pos]
        .parse::<f64>()
        .map(|value| (value, pos))
        .map_err(|_| syntax(start, "malformed number"))
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Token, usize)> {
        self.tokens.get(self.cursor)
    }

    fn next(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.tokens.get(self.cursor).map(|(_, p)| *p).unwrap_or(self.len)
    }

    fn expr(&mut self) -> Result<RationalMap> {
        let mut acc = self.term()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?)?;
                }
                Token::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalMap> {
        let mut acc = self.factor()?;
        while let Some((tok, _)) = self.peek() {
            match tok {
                Token::Star => {
                    self.next();
                    acc = acc.mul(&self.factor()?)?;
                }
                Token::Slash => {
                    self.next();
                    acc = acc.div(&self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalMap> {
        if matches!(self.peek(), Some((Token::Minus, _))) {
            self.next();
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if matches!(self.peek(), Some((Token::Caret, _))) {
            self.next();
            let at = self.here();
            match self.next() {
                Some((Token::Number(n), _)) if n.fract() == 0.0 && n >= 0.0 => {
                    if n > MAX_EXPONENT as f64 {
                        return Err(syntax(at, "exponent exceeds the supported maximum 64"));
                    }
                    return base.pow(n as u32);
                }
                _ => return Err(syntax(at, "exponent must be a nonnegative integer")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalMap> {
        let at = self.here();
        match self.next() {
            Some((Token::Number(v), _)) => Ok(RationalMap::constant(Complex64::new(v, 0.0))),
            Some((Token::Imaginary(v), _)) => Ok(RationalMap::constant(Complex64::new(0.0, v))),
            Some((Token::Z, _)) => Ok(RationalMap::identity()),
            Some((Token::LParen, _)) => {
                let inner = self.expr()?;
                match self.next() {
                    Some((Token::RParen, _)) => Ok(inner),
                    _ => Err(syntax(self.len.min(self.here()), "expected ')'")),
                }
            }
            Some((_, p)) => Err(syntax(p, "expected a number, 'i', 'z', or '('")),
            None => Err(syntax(at, "unexpected end of expression")),
        }
    }
}

/// Parses an expression into a reduced, canonical rational map.
pub fn parse_map(text: &str) -> Result<RationalMap> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut parser = Parser { tokens, cursor: 0, len: text.len() };
    let map = parser.expr()?;
    if let Some((_, p)) = parser.peek() {
        return Err(syntax(*p, "unexpected trailing input"));
    }
    Ok(map)
}

/// Parses an expression that must reduce to a constant, e.g. a point
/// argument like `0.25` or `0.1+0.2i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let map = parse_map(text)?;
    if !map.is_constant() {
        return Err(syntax(0, "expression does not reduce to a constant"));
    }
    map.eval_finite(Complex64::new(0.0, 0.0))
}

/// Formats a map so that parsing the result yields the identical canonical
/// map: coefficients print in shortest round-trip form, terms ascend by
/// power, and a nontrivial denominator wraps both parts in parentheses.
pub fn format_map(map: &RationalMap) -> String {
    if map.is_polynomial() {
        format_poly(map.num())
    } else {
        format!("({})/({})", format_poly(map.num()), format_poly(map.denom()))
    }
}

fn format_poly(p: &ComplexPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for k in 0..=p.degree() {
        let c = p.coeff(k);
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (joiner, magnitude) = term_sign(c, out.is_empty());
        out.push_str(joiner);
        out.push_str(&term_body(magnitude, k));
    }
    out
}

/// Splits a coefficient into a textual joiner and the value to print after
/// it: pure real and pure imaginary coefficients move their sign into the
/// joiner, full complex ones keep it inside their parentheses.
fn term_sign(c: Complex64, first: bool) -> (&'static str, Complex64) {
    let negative = (c.im == 0.0 && c.re < 0.0) || (c.re == 0.0 && c.im < 0.0);
    match (first, negative) {
        (true, false) => ("", c),
        (true, true) => ("-", -c),
        (false, false) => (" + ", c),
        (false, true) => (" - ", -c),
    }
}

fn term_body(c: Complex64, power: usize) -> String {
    let coeff = if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        if c.im == 1.0 {
            "i".to_string()
        } else {
            format!("{}i", c.im)
        }
    } else {
        format!("({}{:+}i)", c.re, c.im)
    };
    match power {
        0 => coeff,
        _ => {
            let var = if power == 1 { "z".to_string() } else { format!("z^{power}") };
            if c == Complex64::new(1.0, 0.0) {
                var
            } else {
                format!("{coeff}*{var}")
            }
        }
    }
}
