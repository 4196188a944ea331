//! Text input for polynomials.
//!
//! ```text
//! expr  ::= term (('+' | '-') term)*
//! term  ::= unary ('*' unary)*
//! unary ::= '-' unary | power
//! power ::= atom ('^' INT)?
//! atom  ::= INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! Identifiers are `[A-Za-z][A-Za-z0-9_]*`. Multiplication must be written
//! out: `2x` is an error. A fraction `a/b` is only allowed between integer
//! literals.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{SparsePoly, VarSet};
use crate::scalar::Rational;

const MAX_DEPTH: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Rat(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(u8),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Sym(c) => format!("'{}'", *c as char),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    tok: Tok,
    tok_start: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            tok: Tok::End,
            tok_start: 0,
            depth: 0,
        };
        p.bump()?;
        Ok(p)
    }

    fn error(&self, expected: &[&'static str]) -> Error {
        Error::Syntax {
            offset: self.tok_start,
            expected: expected.to_vec(),
            found: self.tok.describe(),
        }
    }

    fn bump(&mut self) -> Result<()> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_start = self.pos;
        let Some(&c) = self.src.get(self.pos) else {
            self.tok = Tok::End;
            return Ok(());
        };
        let run = |pos: usize, f: fn(u8) -> bool| {
            pos + self.src[pos..].iter().take_while(|&&b| f(b)).count()
        };
        self.tok = if c.is_ascii_digit() {
            let end = run(self.pos, |b| b.is_ascii_digit());
            let digits = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii");
            self.pos = end;
            Tok::Int(digits.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() {
            let end = run(self.pos, |b| b.is_ascii_alphanumeric() || b == b'_');
            let name = std::str::from_utf8(&self.src[self.pos..end]).expect("ascii");
            self.pos = end;
            Tok::Ident(name.to_string())
        } else if b"+-*/^()".contains(&c) {
            self.pos += 1;
            Tok::Sym(c)
        } else {
            let ch = std::str::from_utf8(&self.src[self.pos..])
                .ok()
                .and_then(|s| s.chars().next())
                .unwrap_or('?');
            return Err(Error::Syntax {
                offset: self.pos,
                expected: vec!["expression"],
                found: format!("character {ch:?}"),
            });
        };
        Ok(())
    }

    fn eat(&mut self, sym: u8) -> Result<bool> {
        if self.tok == Tok::Sym(sym) {
            self.bump()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn nest(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Error::Syntax {
                offset: self.tok_start,
                expected: vec!["shallower nesting"],
                found: self.tok.describe(),
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+')? {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-')? {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat(b'*')? {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-')? {
            self.nest()?;
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^')? {
            return Ok(base);
        }
        let Tok::Int(n) = &self.tok else {
            return Err(self.error(&["non-negative integer exponent"]));
        };
        let Ok(n) = u32::try_from(n) else {
            return Err(self.error(&["exponent below 2^32"]));
        };
        self.bump()?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr> {
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Int(n) => {
                self.bump()?;
                if !self.eat(b'/')? {
                    return Ok(Expr::Int(n));
                }
                let Tok::Int(d) = &self.tok else {
                    return Err(self.error(&["integer denominator"]));
                };
                if d.is_zero() {
                    return Err(self.error(&["nonzero denominator"]));
                }
                let r = Rational::new(n, d.clone());
                self.bump()?;
                Ok(Expr::Rat(r))
            }
            Tok::Ident(name) => {
                self.bump()?;
                Ok(Expr::Var(name))
            }
            Tok::Sym(b'(') => {
                self.tok = Tok::Sym(b'(');
                self.nest()?;
                self.bump()?;
                let e = self.expr()?;
                self.depth -= 1;
                if !self.eat(b')')? {
                    return Err(self.error(&["')'", "operator"]));
                }
                Ok(e)
            }
            other => {
                self.tok = other;
                Err(self.error(&["integer", "identifier", "'('", "'-'"]))
            }
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Expands `e` into a polynomial over `vars`.
pub fn to_multipoly(e: &Expr, vars: &VarSet) -> Result<SparsePoly<Rational>> {
    Ok(match e {
        Expr::Int(n) => SparsePoly::constant(vars, Rational::from_integer(n.clone())),
        Expr::Rat(r) => SparsePoly::constant(vars, r.clone()),
        Expr::Var(name) => SparsePoly::variable(vars, name)?,
        Expr::Neg(a) => -&to_multipoly(a, vars)?,
        Expr::Add(a, b) => to_multipoly(a, vars)?.try_add(&to_multipoly(b, vars)?)?,
        Expr::Sub(a, b) => to_multipoly(a, vars)?.try_sub(&to_multipoly(b, vars)?)?,
        Expr::Mul(a, b) => to_multipoly(a, vars)?.try_mul(&to_multipoly(b, vars)?)?,
        Expr::Pow(a, n) => to_multipoly(a, vars)?.pow(*n),
    })
}

/// [`parse`] followed by [`to_multipoly`].
pub fn parse_poly(text: &str, vars: &VarSet) -> Result<SparsePoly<Rational>> {
    to_multipoly(&parse(text)?, vars)
}
