//! Parser for the ideal-file grammar and for bare polynomial
//! expressions.
//!
//! ```text
//! ring x, y, z;          # variables, ascending significance
//! param a, b;            # optional parameters
//! ideal x^2, x*y - a*z;  # comma-separated generators
//! ```
//!
//! Tokens: identifiers, integers, rationals `p/q`, operators `+ - * ^`,
//! parentheses, commas, semicolons. `#` starts a line comment;
//! whitespace is insignificant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::kernel::BigRational;

use super::{Polynomial, RingContext};

/// Syntax or name-resolution error, with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}:{}", self.message, self.line, self.col)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(BigRational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: message.into() }
    }

    fn bump(&mut self) -> u8 {
        let b = self.src[self.pos];
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        b
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn lex_integer(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.bump();
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                None => break,
                Some(b) if b.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                Some(b) => {
                    let (line, col) = (self.line, self.col);
                    let tok = match b {
                        b'+' => {
                            self.bump();
                            Tok::Plus
                        }
                        b'-' => {
                            self.bump();
                            Tok::Minus
                        }
                        b'*' => {
                            self.bump();
                            Tok::Star
                        }
                        b'^' => {
                            self.bump();
                            Tok::Caret
                        }
                        b'(' => {
                            self.bump();
                            Tok::LParen
                        }
                        b')' => {
                            self.bump();
                            Tok::RParen
                        }
                        b',' => {
                            self.bump();
                            Tok::Comma
                        }
                        b';' => {
                            self.bump();
                            Tok::Semi
                        }
                        b'0'..=b'9' => {
                            let numer = self.lex_integer();
                            let denom = if self.peek() == Some(b'/')
                                && matches!(self.src.get(self.pos + 1), Some(b'0'..=b'9'))
                            {
                                self.bump();
                                Some(self.lex_integer())
                            } else {
                                None
                            };
                            let n: BigInt = numer.parse().expect("digits");
                            let d: BigInt = denom
                                .map(|s| s.parse().expect("digits"))
                                .unwrap_or_else(|| BigInt::from(1));
                            if d.is_zero() {
                                return Err(ParseError {
                                    line,
                                    col,
                                    message: "rational literal with zero denominator".into(),
                                });
                            }
                            Tok::Number(BigRational::new(n, d))
                        }
                        b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                            let start = self.pos;
                            while matches!(
                                self.peek(),
                                Some(b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' | b'_')
                            ) {
                                self.bump();
                            }
                            Tok::Ident(
                                String::from_utf8_lossy(&self.src[start..self.pos]).into_owned(),
                            )
                        }
                        other => {
                            return Err(self.error(format!(
                                "unexpected character `{}`",
                                other as char
                            )))
                        }
                    };
                    out.push(Spanned { tok, line, col });
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    idx: usize,
    ctx: &'a RingContext,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.idx)
            .map(|s| (s.line, s.col))
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError { line, col, message: message.into() }
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|s| s.tok.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(tok) {
            self.idx += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    let rhs = self.term()?;
                    acc = acc.add(&rhs).expect("same context");
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs).expect("same context");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.idx += 1;
            let rhs = self.factor()?;
            acc = acc.mul(&rhs).expect("same context");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.idx += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.idx += 1;
            match self.bump() {
                Some(Tok::Number(n)) if n.is_integer() && !num_traits::Signed::is_negative(&n) => {
                    let exp: u32 = n.to_integer().try_into().map_err(|_| {
                        self.error("exponent too large")
                    })?;
                    return Ok(base.pow(exp));
                }
                _ => return Err(self.error("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                if self.ctx.var_index(&name).is_some() {
                    Ok(Polynomial::var_named(self.ctx, &name).expect("resolved"))
                } else if self.ctx.param_index(&name).is_some() {
                    Ok(Polynomial::param_named(self.ctx, &name).expect("resolved"))
                } else {
                    let mut e = self.error(format!("unknown identifier `{name}`"));
                    // Point at the identifier itself, not past it.
                    if let Some(prev) = self.toks.get(self.idx - 1) {
                        e.line = prev.line;
                        e.col = prev.col;
                    }
                    Err(e)
                }
            }
            Some(Tok::Number(n)) => {
                self.idx += 1;
                Ok(Polynomial::constant(self.ctx, n))
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(other) => Err(self.error(format!("unexpected token `{other:?}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn end_position(text: &str) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for b in text.bytes() {
        if b == b'\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

/// Parses a single polynomial expression in the given context.
pub fn parse_polynomial(text: &str, ctx: &RingContext) -> Result<Polynomial, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let mut p = Parser { toks, idx: 0, ctx, end: end_position(text) };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input after expression"));
    }
    Ok(poly)
}

/// A parsed ideal file: the declared ring and the generator list. When
/// the file declares parameters the generators may use them.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ctx: RingContext,
    pub generators: Vec<Polynomial>,
}

/// Parses a full ideal file (`ring ...; [param ...;] ideal ...;`).
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, ParseError> {
    let toks = Lexer::new(text).tokens()?;
    let end = end_position(text);
    let dummy = RingContext::new(["_x"], Vec::<String>::new()).expect("valid");
    let mut p = Parser { toks, idx: 0, ctx: &dummy, end };

    fn keyword(p: &mut Parser<'_>, kw: &str) -> Result<bool, ParseError> {
        match p.peek() {
            Some(Tok::Ident(name)) if name == kw => {
                p.idx += 1;
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    fn name_list(p: &mut Parser<'_>) -> Result<Vec<String>, ParseError> {
        let mut names = Vec::new();
        loop {
            match p.peek() {
                Some(Tok::Ident(name)) => {
                    names.push(name.clone());
                    p.idx += 1;
                }
                _ => return Err(p.error("expected a name")),
            }
            match p.peek() {
                Some(Tok::Comma) => {
                    p.idx += 1;
                }
                _ => break,
            }
        }
        Ok(names)
    }

    if !keyword(&mut p, "ring")? {
        return Err(p.error("expected `ring` declaration"));
    }
    let vars = name_list(&mut p)?;
    p.expect(&Tok::Semi, "`;`")?;

    let params = if keyword(&mut p, "param")? {
        let names = name_list(&mut p)?;
        p.expect(&Tok::Semi, "`;`")?;
        names
    } else {
        Vec::new()
    };

    let ctx = RingContext::new(vars, params).map_err(|e| ParseError {
        line: 1,
        col: 1,
        message: e.to_string(),
    })?;

    if !keyword(&mut p, "ideal")? {
        return Err(p.error("expected `ideal` declaration"));
    }
    let mut generators = Vec::new();
    {
        let mut q = Parser { toks: p.toks, idx: p.idx, ctx: &ctx, end };
        loop {
            generators.push(q.expr()?);
            match q.peek() {
                Some(Tok::Comma) => {
                    q.idx += 1;
                }
                _ => break,
            }
        }
        q.expect(&Tok::Semi, "`;`")?;
        if q.peek().is_some() {
            return Err(q.error("trailing input after `ideal` declaration"));
        }
    }

    Ok(IdealFile { ctx, generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> RingContext {
        RingContext::new(["x", "y"], ["a"]).unwrap()
    }

    #[test]
    fn literal_reading() {
        let c = ctx();
        let f = parse_polynomial("x^2 - 2*x*y", &c).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.to_string(), "-2*x*y + x^2");
    }

    #[test]
    fn zero_literal() {
        assert!(parse_polynomial("0", &ctx()).unwrap().is_zero());
    }

    #[test]
    fn dangling_operator_reports_end_of_input() {
        let err = parse_polynomial("x + ", &ctx()).unwrap_err();
        assert!(err.message.contains("end of input"), "{err}");
        assert_eq!((err.line, err.col), (1, 5));
    }

    #[test]
    fn unknown_identifier_is_rejected_with_position() {
        let err = parse_polynomial("x + w", &ctx()).unwrap_err();
        assert!(err.message.contains("unknown identifier"), "{err}");
        assert_eq!((err.line, err.col), (1, 5));
    }

    #[test]
    fn rational_literals_and_parens() {
        let c = ctx();
        let f = parse_polynomial("1/2*(x + y)^2 - a*y", &c).unwrap();
        let g = parse_polynomial("1/2*x^2 + x*y + 1/2*y^2 - a*y", &c).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn ideal_file_with_params_and_comments() {
        let text = "# a family\nring x, y;\nparam a;\nideal y^2, x*y, y - a*x^2;\n";
        let file = parse_ideal_file(text).unwrap();
        assert_eq!(file.ctx.vars(), ["x", "y"]);
        assert_eq!(file.ctx.params(), ["a"]);
        assert_eq!(file.generators.len(), 3);
    }

    #[test]
    fn display_round_trip_samples() {
        let c = ctx();
        for text in [
            "0",
            "x",
            "-x",
            "3/4",
            "x^2 - 2*x*y + 5",
            "y - a*x^2",
            "(a^2 - 1)*x + a",
            "2*a*x*y^3 - 1/2",
        ] {
            let f = parse_polynomial(text, &c).unwrap();
            let g = parse_polynomial(&f.to_string(), &c).unwrap();
            assert_eq!(f, g, "round trip failed for `{text}` -> `{f}`");
        }
    }
}
