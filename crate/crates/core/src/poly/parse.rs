//! Polynomial text grammar.
//!
//! Variables `x` and `y`; integer and rational literals (`3`, `5/2`);
//! operators `+ - * ^`; parentheses. Implicit multiplication is not allowed:
//! `x*y` parses, `xy` and `2x` do not. Exponents are nonnegative integers.
//!
//! Example: `(y^2-x^3)^4 + x^8*y^5`.

use std::fmt;

use num_traits::{One, Zero};

use crate::field::Field;
use crate::poly::BivariatePoly;
use crate::{Int, QPoly, Rat};

/// Parse error with 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Var(u8), // 0 = x, 1 = y
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    var_names: [char; 2],
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, var_names: [char; 2]) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
            var_names,
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let (line, col) = (self.line, self.col);
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.bump();
                }
                b'+' => {
                    self.bump();
                    out.push((Tok::Plus, line, col));
                }
                b'-' => {
                    self.bump();
                    out.push((Tok::Minus, line, col));
                }
                b'*' => {
                    self.bump();
                    out.push((Tok::Star, line, col));
                }
                b'^' => {
                    self.bump();
                    out.push((Tok::Caret, line, col));
                }
                b'(' => {
                    self.bump();
                    out.push((Tok::LParen, line, col));
                }
                b')' => {
                    self.bump();
                    out.push((Tok::RParen, line, col));
                }
                b'0'..=b'9' => {
                    let mut digits = String::new();
                    while matches!(self.peek(), Some(b'0'..=b'9')) {
                        digits.push(self.bump().unwrap() as char);
                    }
                    let numer: Int = digits.parse().unwrap();
                    // A rational literal `p/q`; the slash binds only to digits.
                    let denom = if self.peek() == Some(b'/') {
                        self.bump();
                        if !matches!(self.peek(), Some(b'0'..=b'9')) {
                            return Err(self.err("expected digits after `/` in rational literal"));
                        }
                        let mut d = String::new();
                        while matches!(self.peek(), Some(b'0'..=b'9')) {
                            d.push(self.bump().unwrap() as char);
                        }
                        let den: Int = d.parse().unwrap();
                        if den.is_zero() {
                            return Err(ParseError {
                                line,
                                col,
                                message: "rational literal with zero denominator".into(),
                            });
                        }
                        den
                    } else {
                        Int::one()
                    };
                    out.push((Tok::Num(Rat::new(numer, denom)), line, col));
                }
                _ => {
                    let ch = char::from(c);
                    if ch == self.var_names[0] {
                        self.bump();
                        out.push((Tok::Var(0), line, col));
                    } else if ch == self.var_names[1] {
                        self.bump();
                        out.push((Tok::Var(1), line, col));
                    } else {
                        return Err(self.err(format!("unexpected character `{ch}`")));
                    }
                }
            }
        }
        Ok(out)
    }
}

struct Parser<K: Field> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    _k: std::marker::PhantomData<K>,
}

impl<K: Field> Parser<K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.1, t.2))
            .unwrap_or_else(|| {
                self.toks
                    .last()
                    .map(|t| (t.1, t.2 + 1))
                    .unwrap_or((1, 1))
            })
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t.map(|t| t.0)
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<BivariatePoly<K>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := ('-'|'+')* factor ('*' factor)*
    fn term(&mut self) -> Result<BivariatePoly<K>, ParseError> {
        let mut neg = false;
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    self.bump();
                    neg = !neg;
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        if neg {
            acc = acc.neg();
        }
        Ok(acc)
    }

    // factor := atom ('^' uint)?
    fn factor(&mut self) -> Result<BivariatePoly<K>, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Num(r)) if r.denom().is_one() && r.numer() >= &Int::zero() => {
                    let e: u32 = r.numer().to_string().parse().map_err(|_| {
                        self.err("exponent too large")
                    })?;
                    Ok(base.pow(e))
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    Err(self.err("expected nonnegative integer exponent after `^`"))
                }
            }
        } else {
            Ok(base)
        }
    }

    // atom := number | variable | '(' expr ')'
    fn atom(&mut self) -> Result<BivariatePoly<K>, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(r)) => {
                self.bump();
                Ok(BivariatePoly::constant(K::from_rat(&r)))
            }
            Some(Tok::Var(0)) => {
                self.bump();
                Ok(BivariatePoly::var_x())
            }
            Some(Tok::Var(1)) => {
                self.bump();
                Ok(BivariatePoly::var_y())
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable, or `(`")),
        }
    }
}

/// Parse a polynomial in variables `x`, `y` over the rationals.
pub fn parse_poly(src: &str) -> Result<QPoly, ParseError> {
    parse_poly_in::<Rat>(src, ['x', 'y'])
}

/// Parse with custom single-character variable names (used by the chart-log
/// data format where charts are written in `u`, `w`).
pub fn parse_poly_in<K: Field>(src: &str, vars: [char; 2]) -> Result<BivariatePoly<K>, ParseError> {
    let toks = Lexer::new(src, vars).tokens()?;
    if toks.is_empty() {
        return Err(ParseError {
            line: 1,
            col: 1,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser::<K> {
        toks,
        pos: 0,
        _k: std::marker::PhantomData,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after polynomial"));
    }
    Ok(out)
}

/// Render a polynomial in the same grammar it is parsed from, with terms in
/// descending graded-lex order. Output is stable across runs.
pub fn render<K: Field>(p: &BivariatePoly<K>, xname: &str, yname: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&(u32, u32), &K)> = p.terms().collect();
    terms.sort_by(|(&(a1, b1), _), (&(a2, b2), _)| {
        (a2 + b2, a2).cmp(&(a1 + b1, a1))
    });
    let mut out = String::new();
    for (i, (&(a, b), c)) in terms.iter().enumerate() {
        let cs = c.render();
        let (sign, mag) = match cs.strip_prefix('-') {
            Some(rest) => ("-", rest.to_string()),
            None => ("+", cs),
        };
        if i == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(if sign == "-" { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        let trivial_coeff = mag == "1";
        if !trivial_coeff || (a == 0 && b == 0) {
            // parenthesize non-rational or fractional coefficients
            if mag.contains(|ch: char| ch == '+' || ch == ' ' || ch == '*') {
                factors.push(format!("({mag})"));
            } else {
                factors.push(mag.clone());
            }
        }
        if a > 0 {
            factors.push(if a == 1 {
                xname.to_string()
            } else {
                format!("{xname}^{a}")
            });
        }
        if b > 0 {
            factors.push(if b == 1 {
                yname.to_string()
            } else {
                format!("{yname}^{b}")
            });
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_examples() {
        let f = parse_poly("(y^2-x^3)^4 + x^8*y^5").unwrap();
        assert_eq!(f.coeff(0, 8), crate::field::rat_int(1));
        assert_eq!(f.coeff(3, 6), crate::field::rat_int(-4));
        assert_eq!(f.coeff(8, 5), crate::field::rat_int(1));
        assert_eq!(f.coeff(12, 0), crate::field::rat_int(1));
        assert_eq!(f.num_terms(), 6);
    }

    #[test]
    fn rational_literals() {
        let f = parse_poly("5/2*x - 1/3").unwrap();
        assert_eq!(f.coeff(1, 0), crate::field::rat(5, 2));
        assert_eq!(f.coeff(0, 0), crate::field::rat(-1, 3));
    }

    #[test]
    fn rejects_implicit_multiplication() {
        // `xy` lexes as x followed by y with no operator
        assert!(parse_poly("x y").is_err());
        assert!(parse_poly("2x").is_err());
        assert!(parse_poly("x(y+1)").is_err());
    }

    #[test]
    fn error_positions() {
        let e = parse_poly("x + \n z").unwrap_err();
        assert_eq!((e.line, e.col), (2, 2));
        let e = parse_poly("x^(2)").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_poly("x/2").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn unary_minus_and_nesting() {
        let f = parse_poly("-(x - y)^2 + -x*y").unwrap();
        let g = parse_poly("0 - x^2 + x*y - y^2").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn render_roundtrip() {
        for s in [
            "(y^2-x^3)^4 + x^8*y^5",
            "x",
            "y^2 - x^3",
            "5/2*x - 1/3",
            "x^2*y^3 + 7",
        ] {
            let p1 = parse_poly(s).unwrap();
            let rendered = render(&p1, "x", "y");
            let p2 = parse_poly(&rendered).unwrap();
            assert_eq!(p1, p2, "roundtrip failed for `{s}` -> `{rendered}`");
        }
    }
}
