//! Polynomial expression grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ['^' uint]
//! atom   := uint | ident | '@' | '(' expr ')'
//! ```
//!
//! `@` denotes the generator of an extension field `F_{p^d}` (a root of its
//! modulus). Juxtaposition is not multiplication: `2X` is rejected.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::poly::{MultiPoly, PolyRing};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    At,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '@' => Tok::At,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(AlgebraError::SyntaxError {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a PolyRing,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::SyntaxError { position: self.at(), message: message.into() })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            Tok::Minus => {
                self.bump();
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.at();
            match self.bump() {
                Tok::Int(s) => {
                    let e: u32 = s.parse().map_err(|_| AlgebraError::SyntaxError {
                        position: pos,
                        message: format!("exponent `{s}` out of range"),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(AlgebraError::SyntaxError {
                        position: pos,
                        message: "expected a nonnegative integer exponent".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let pos = self.at();
        match self.bump() {
            Tok::Int(s) => {
                let f = self.ring.field();
                let p = f.characteristic();
                let v = s.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
                Ok(self.ring.constant(f.from_u64(v)))
            }
            Tok::Ident(name) => self
                .ring
                .var_named(&name)
                .ok_or(AlgebraError::UnknownVariable { name, position: pos }),
            Tok::At => {
                let f = self.ring.field();
                if f.is_prime_field() {
                    return Err(AlgebraError::SyntaxError {
                        position: pos,
                        message: "`@` requires an extension field".into(),
                    });
                }
                Ok(self.ring.constant(f.generator()))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(AlgebraError::SyntaxError { position: pos, message: "unexpected end of input".into() }),
            t => Err(AlgebraError::SyntaxError { position: pos, message: format!("unexpected token {t:?}") }),
        }
    }
}

/// Parses `text` as an element of `ring`.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<MultiPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(out)
}

/// Parses in a fresh ring over `field` with the given variables.
pub fn parse_poly_in<S: AsRef<str>>(text: &str, vars: &[S], field: &Field) -> Result<MultiPoly> {
    parse_poly(text, &PolyRing::new(field, vars))
}

/// Field literal `p` or `p^d` (default modulus).
pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    let bad = |m: &str| AlgebraError::SyntaxError { position: 0, message: format!("{m}: `{t}`") };
    let (p, d) = match t.split_once('^') {
        Some((a, b)) => (
            a.trim().parse::<u64>().map_err(|_| bad("bad characteristic"))?,
            b.trim().parse::<u32>().map_err(|_| bad("bad extension degree"))?,
        ),
        None => (t.parse::<u64>().map_err(|_| bad("bad characteristic"))?, 1),
    };
    Field::new(p, d)
}
