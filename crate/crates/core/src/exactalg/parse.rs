//! Text form of polynomials.
//!
//! A variable is one letter followed by optional digits. Ring variables are
//! lowercase, dual variables the uppercase of the same name. `*` is optional
//! between factors; `^` takes a nonnegative integer; parentheses nest.

use super::monomial::Monomial;
use super::poly::{Polynomial, Side};
use super::scalar::{self, Scalar};
use crate::error::{Error, Result};
use num_traits::{One, Signed};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames {
    names: Vec<String>,
}

impl VarNames {
    /// `x1..xm`.
    pub fn indexed(m: usize) -> Self {
        VarNames { names: (1..=m).map(|i| format!("x{i}")).collect() }
    }

    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::new();
        for n in names {
            let n = n.as_ref().trim().to_ascii_lowercase();
            let mut ch = n.chars();
            let ok = matches!(ch.next(), Some(c) if c.is_ascii_alphabetic()) && ch.all(|c| c.is_ascii_digit());
            if !ok {
                return Err(Error::Parse(format!("bad variable name '{n}'")));
            }
            if out.contains(&n) {
                return Err(Error::Parse(format!("duplicate variable name '{n}'")));
            }
            out.push(n);
        }
        Ok(VarNames { names: out })
    }

    /// Either a count (`5`) or a comma separated list of names (`x,y,z`).
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Ok(m) = spec.parse::<usize>() {
            return Ok(Self::indexed(m));
        }
        let parts: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Self::new(&parts)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize, side: Side) -> String {
        match side {
            Side::Ring => self.names[i].clone(),
            Side::Dual => self.names[i].to_ascii_uppercase(),
        }
    }

    fn short(&self) -> bool {
        self.names.iter().all(|n| n.len() == 1)
    }

    fn lookup(&self, ident: &str) -> Option<(usize, Side)> {
        if let Some(i) = self.names.iter().position(|n| n == ident) {
            return Some((i, Side::Ring));
        }
        let lower = ident.to_ascii_lowercase();
        if ident.starts_with(|c: char| c.is_ascii_uppercase()) {
            if let Some(i) = self.names.iter().position(|n| *n == lower) {
                return Some((i, Side::Dual));
            }
        }
        None
    }

    pub fn parse(&self, text: &str, side: Side) -> Result<Polynomial> {
        let toks = tokenize(text)?;
        let mut p = Parser { toks, pos: 0, names: self, side, src: text };
        let poly = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(poly)
    }

    pub fn parse_ring(&self, text: &str) -> Result<Polynomial> {
        self.parse(text, Side::Ring)
    }

    pub fn parse_dual(&self, text: &str) -> Result<Polynomial> {
        self.parse(text, Side::Dual)
    }

    /// Splits on top-level `,` or `;` and parses each piece.
    pub fn parse_list(&self, text: &str, side: Side) -> Result<Vec<Polynomial>> {
        split_top_level(text).into_iter().map(|s| self.parse(s, side)).collect()
    }

    pub fn format_monomial(&self, m: &Monomial, side: Side) -> String {
        let sep = if self.short() { "" } else { "*" };
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let n = self.name(i, side);
            parts.push(if e == 1 { n } else { format!("{n}^{e}") });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(sep)
        }
    }

    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let sep = if self.short() { "" } else { "*" };
        let mut out = String::new();
        for (k, (m, c)) in p.terms().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let mono = self.format_monomial(m, p.side());
            if m.degree() == 0 {
                out.push_str(&scalar::format_scalar(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else if a.is_integer() {
                out.push_str(&format!("{}{sep}{mono}", scalar::format_scalar(&a)));
            } else {
                out.push_str(&format!("{}*{mono}", scalar::format_scalar(&a)));
            }
        }
        out
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial) -> impl fmt::Display + 'a {
        struct D<'a>(&'a VarNames, &'a Polynomial);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&VarNames::indexed(self.nvars()).format(self))
    }
}

pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Num(b[st..i].iter().collect())));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            i += 1;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Ident(b[st..i].iter().collect())));
        } else if "+-*^/()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' at {i} in '{s}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    names: &'a VarNames,
    side: Side,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let at = self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.src.len());
        Error::Parse(format!("{msg} at {at} in '{}'", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.names.len(), self.side)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    1
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let q = match self.peek() {
                        Some(Tok::Num(n)) => scalar::parse_scalar(n),
                        _ => None,
                    };
                    let q = q.filter(|q| *q != scalar::zero()).ok_or_else(|| self.err("expected nonzero divisor"))?;
                    self.pos += 1;
                    acc = acc.scale(&(Scalar::one() / q));
                }
                _ if self.starts_factor() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.parse::<u32>().ok(),
                _ => None,
            };
            let e = e.ok_or_else(|| self.err("expected exponent"))?;
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        match self.peek().cloned() {
            Some(Tok::Num(s)) => {
                self.pos += 1;
                let c = scalar::parse_scalar(&s).ok_or_else(|| self.err("bad number"))?;
                Ok(Polynomial::constant(n, self.side, c))
            }
            Some(Tok::Ident(id)) => {
                let (i, side) = self
                    .names
                    .lookup(&id)
                    .ok_or_else(|| self.err(&format!("unknown variable '{id}'")))?;
                if side != self.side {
                    return Err(self.err(&format!("variable '{id}' is on the wrong side")));
                }
                self.pos += 1;
                Ok(Polynomial::var(n, i, side))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}
