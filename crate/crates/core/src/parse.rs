//! Polynomial expressions and the line-oriented germ file format.
//!
//! ```text
//! # cusp
//! vars: x, y, z
//! params: a = 1/2
//! map: x; y^2 + z^3 + a*x*z
//! point: 0, 0, 0
//! ```

use crate::context::{Ctx, Role, VariableContext};
use crate::error::{GermError, ParseError};
use crate::germ::MapGerm;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
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

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str, line0: usize, col0: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let (tl, tc) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, line: tl, col: tc });
            i += 1;
            col += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Num(chars[start..i].iter().collect()),
                line: tl,
                col: tc,
            });
            continue;
        }
        if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: tl,
                col: tc,
            });
            continue;
        }
        return Err(ParseError::new(tl, tc, format!("unexpected character `{ch}`")));
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a Ctx,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, t: &Token, msg: impl Into<String>) -> ParseError {
        ParseError::new(t.line, t.col, msg)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.next();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        match &t.tok {
            Tok::Num(s) => {
                if self.peek().tok == Tok::Slash {
                    let slash = self.peek().clone();
                    return Err(self.err(&slash, "exponent must be a non-negative integer"));
                }
                let k: u32 = s.parse().map_err(|_| self.err(&t, "exponent too large"))?;
                Ok(base.pow(k))
            }
            Tok::Minus => Err(self.err(&t, "negative exponent")),
            _ => Err(self.err(&t, "exponent must be a non-negative integer")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Num(s) => {
                let mut text = s.clone();
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.next();
                    match &d.tok {
                        Tok::Num(ds) => {
                            text = format!("{s}/{ds}");
                        }
                        _ => return Err(self.err(&d, "expected an integer denominator")),
                    }
                }
                let r: Rational = text.parse().map_err(|_| self.err(&t, "zero denominator"))?;
                Ok(Polynomial::constant(self.ctx, r))
            }
            Tok::Ident(name) => Polynomial::var_named(self.ctx, name)
                .map_err(|_| self.err(&t, format!("unknown identifier `{name}`"))),
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.next();
                if close.tok != Tok::RParen {
                    return Err(self.err(&close, "expected `)`"));
                }
                Ok(e)
            }
            Tok::End => Err(self.err(&t, "unexpected end of input")),
            other => Err(self.err(&t, format!("unexpected token {}", describe(other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::LParen => "`(`",
        Tok::RParen => "`)`",
        _ => "token",
    }
}

/// Parses `text` as a polynomial over `ctx`.
pub fn parse_polynomial(text: &str, ctx: &Ctx) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, ctx, 1, 1)
}

/// As `parse_polynomial`, reporting positions relative to (line, column).
pub fn parse_polynomial_at(text: &str, ctx: &Ctx, line: usize, column: usize) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text, line, column)?;
    let mut p = Parser { toks, pos: 0, ctx };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(p.err(&t, format!("unexpected token {}", describe(&t.tok))));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Located<T> {
    pub value: T,
    pub line: usize,
    pub column: usize,
}

/// Parsed germ file.
#[derive(Clone, Debug, PartialEq)]
pub struct GermDocument {
    pub sources: Vec<String>,
    pub params: Vec<(String, Option<Rational>)>,
    pub components: Vec<Located<String>>,
    pub point: Option<Vec<Rational>>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Germ(#[from] GermError),
}

fn split_list(body: &str, line: usize, col0: usize) -> Vec<Located<String>> {
    let mut out = Vec::new();
    let mut col = col0;
    for piece in body.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let t = piece.trim();
        if !t.is_empty() {
            out.push(Located {
                value: t.to_string(),
                line,
                column: col + lead,
            });
        }
        col += piece.chars().count() + 1;
    }
    out
}

fn is_identifier(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_alphabetic() || c == '_') && ch.all(|c| c.is_alphanumeric() || c == '_')
}

impl GermDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut doc = GermDocument {
            sources: Vec::new(),
            params: Vec::new(),
            components: Vec::new(),
            point: None,
        };
        let mut seen_vars = false;
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let content = raw.split('#').next().unwrap_or("");
            if content.trim().is_empty() {
                continue;
            }
            let Some((key, body)) = content.split_once(':') else {
                let col = raw.len() - raw.trim_start().len() + 1;
                return Err(ParseError::new(line, col, "expected `key: value`"));
            };
            let body_col = key.chars().count() + 2;
            match key.trim() {
                "vars" => {
                    seen_vars = true;
                    for item in split_list(body, line, body_col) {
                        if !is_identifier(&item.value) {
                            return Err(ParseError::new(item.line, item.column, "invalid variable name"));
                        }
                        doc.sources.push(item.value);
                    }
                }
                "params" => {
                    for item in split_list(body, line, body_col) {
                        let (name, value) = match item.value.split_once('=') {
                            Some((n, v)) => {
                                let r: Rational = v.trim().parse().map_err(|_| {
                                    ParseError::new(item.line, item.column, format!("invalid rational `{}`", v.trim()))
                                })?;
                                (n.trim().to_string(), Some(r))
                            }
                            None => (item.value.clone(), None),
                        };
                        if !is_identifier(&name) {
                            return Err(ParseError::new(item.line, item.column, "invalid parameter name"));
                        }
                        doc.params.push((name, value));
                    }
                }
                "map" => {
                    let mut col = body_col;
                    for piece in body.split(';') {
                        let lead = piece.len() - piece.trim_start().len();
                        if !piece.trim().is_empty() {
                            doc.components.push(Located {
                                value: piece.trim().to_string(),
                                line,
                                column: col + lead,
                            });
                        }
                        col += piece.chars().count() + 1;
                    }
                }
                "point" => {
                    let mut pt = Vec::new();
                    for item in split_list(body, line, body_col) {
                        pt.push(item.value.parse().map_err(|_| {
                            ParseError::new(item.line, item.column, format!("invalid rational `{}`", item.value))
                        })?);
                    }
                    doc.point = Some(pt);
                }
                other => {
                    let col = raw.len() - raw.trim_start().len() + 1;
                    return Err(ParseError::new(line, col, format!("unknown key `{other}`")));
                }
            }
        }
        if !seen_vars || doc.sources.is_empty() {
            return Err(ParseError::new(1, 1, "missing `vars:` line"));
        }
        if doc.components.is_empty() {
            return Err(ParseError::new(1, 1, "missing `map:` line"));
        }
        Ok(doc)
    }

    pub fn context(&self) -> Result<Ctx, ParseError> {
        VariableContext::new(
            self.sources
                .iter()
                .map(|s| (s.clone(), Role::Source))
                .chain(self.params.iter().map(|(p, _)| (p.clone(), Role::Parameter))),
        )
        .map_err(|e| ParseError::new(1, 1, e.to_string()))
    }

    /// Components parsed over the document's context, parameters unbound.
    pub fn polynomials(&self) -> Result<(Ctx, Vec<Polynomial>), ParseError> {
        let ctx = self.context()?;
        let comps = self
            .components
            .iter()
            .map(|c| parse_polynomial_at(&c.value, &ctx, c.line, c.column))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((ctx, comps))
    }

    /// The germ at the base point (or the origin) with bound parameters
    /// substituted, optionally overriding the point.
    pub fn to_germ(&self, point: Option<&[Rational]>) -> Result<MapGerm, DocumentError> {
        let (ctx, comps) = self.polynomials()?;
        let bindings: Vec<(usize, Rational)> = self
            .params
            .iter()
            .filter_map(|(n, v)| v.clone().map(|v| (ctx.index_of(n).expect("declared"), v)))
            .collect();
        let comps: Vec<Polynomial> = comps.iter().map(|c| c.bind(&bindings)).collect();
        let origin = vec![Rational::zero(); self.sources.len()];
        let point = point.or(self.point.as_deref()).unwrap_or(&origin);
        Ok(MapGerm::at_point(&ctx, comps, point)?)
    }
}
