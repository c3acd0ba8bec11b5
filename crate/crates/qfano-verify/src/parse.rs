//! A small expression parser for building polynomials from readable text.
//!
//! Grammar: rational literals (`3`, `1/30`), names, `+ - * ^ ( )`.
//! Names resolve first through the caller's environment (pre-built
//! polynomials like `q13` or `f1`), then as ring variables. Adjacent
//! factors must be joined with `*`; exponents are nonnegative integers.

use std::collections::HashMap;

use crate::rational::{parse_rat, Rat};
use crate::ring::{AlgebraError, Poly, Ring};

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} at byte {} in `{}`", self.pos, self.src))
    }

    fn next_tok(&mut self) -> Result<Tok, AlgebraError> {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.chars.len() {
            return Ok(Tok::End);
        }
        let c = self.chars[self.pos];
        match c {
            '+' => {
                self.pos += 1;
                Ok(Tok::Plus)
            }
            '-' => {
                self.pos += 1;
                Ok(Tok::Minus)
            }
            '*' => {
                self.pos += 1;
                Ok(Tok::Star)
            }
            '^' => {
                self.pos += 1;
                Ok(Tok::Caret)
            }
            '(' => {
                self.pos += 1;
                Ok(Tok::LParen)
            }
            ')' => {
                self.pos += 1;
                Ok(Tok::RParen)
            }
            c if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                // optional /denominator
                if self.pos < self.chars.len() && self.chars[self.pos] == '/' {
                    let mut probe = self.pos + 1;
                    let dstart = probe;
                    while probe < self.chars.len() && self.chars[probe].is_ascii_digit() {
                        probe += 1;
                    }
                    if probe > dstart {
                        self.pos = probe;
                    }
                }
                let text: String = self.chars[start..self.pos].iter().collect();
                parse_rat(&text)
                    .map(Tok::Num)
                    .ok_or_else(|| self.error("bad number"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Name(self.chars[start..self.pos].iter().collect()))
            }
            _ => Err(self.error("unexpected character")),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    ring: &'a Ring,
    env: &'a HashMap<String, Poly>,
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<(), AlgebraError> {
        self.tok = self.lexer.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = if self.tok == Tok::Minus {
            self.bump()?;
            -self.term()?
        } else {
            if self.tok == Tok::Plus {
                self.bump()?;
            }
            self.term()?
        };
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = acc + t;
                }
                Tok::Minus => {
                    self.bump()?;
                    let t = self.term()?;
                    acc = acc - t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let mut acc = self.factor()?;
        while self.tok == Tok::Star {
            self.bump()?;
            let f = self.factor()?;
            acc = acc * f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, AlgebraError> {
        let base = self.atom()?;
        if self.tok == Tok::Caret {
            self.bump()?;
            let e = match &self.tok {
                Tok::Num(r) if r.is_integer() && *r.numer() >= 0u32.into() => {
                    let e: u32 = r
                        .numer()
                        .try_into()
                        .map_err(|_| self.lexer.error("exponent too large"))?;
                    e
                }
                _ => return Err(self.lexer.error("expected nonnegative integer exponent")),
            };
            self.bump()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, AlgebraError> {
        match self.tok.clone() {
            Tok::Num(r) => {
                self.bump()?;
                Ok(Poly::constant(self.ring, r))
            }
            Tok::Name(name) => {
                self.bump()?;
                if let Some(p) = self.env.get(&name) {
                    Ok(p.clone())
                } else {
                    Poly::var(self.ring, &name)
                }
            }
            Tok::Minus => {
                self.bump()?;
                Ok(-self.atom()?)
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.lexer.error("expected )"));
                }
                self.bump()?;
                Ok(inner)
            }
            _ => Err(self.lexer.error("unexpected token")),
        }
    }
}

/// Parse `src` into a polynomial over `ring`, resolving names through `env`
/// before falling back to ring variables.
pub fn parse_poly_env(
    ring: &Ring,
    env: &HashMap<String, Poly>,
    src: &str,
) -> Result<Poly, AlgebraError> {
    let mut p = Parser {
        lexer: Lexer::new(src),
        tok: Tok::End,
        ring,
        env,
    };
    p.bump()?;
    let out = p.expr()?;
    if p.tok != Tok::End {
        return Err(p.lexer.error("trailing input"));
    }
    Ok(out)
}

/// Parse with an empty environment (names are ring variables).
pub fn parse_poly(ring: &Ring, src: &str) -> Result<Poly, AlgebraError> {
    parse_poly_env(ring, &HashMap::new(), src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::ring::WeightedRing;

    #[test]
    fn parses_weighted_expressions() {
        let r = WeightedRing::new(&[("x", 1), ("y", 1), ("w", 2)]);
        let p = parse_poly(&r, "1/3*x^2 - (y + w)*(y - w) + 2").unwrap();
        let x = Poly::var(&r, "x").unwrap();
        let y = Poly::var(&r, "y").unwrap();
        let w = Poly::var(&r, "w").unwrap();
        let expect = x.pow(2).scale(&rat(1, 3)) - (y.pow(2) - w.pow(2)) + Poly::constant(&r, rat(2, 1));
        assert_eq!(p, expect);
    }

    #[test]
    fn resolves_environment_names_first() {
        let r = WeightedRing::unweighted(&["a", "b"]);
        let a = Poly::var(&r, "a").unwrap();
        let b = Poly::var(&r, "b").unwrap();
        let mut env = HashMap::new();
        env.insert("q".to_string(), &a * &b);
        let p = parse_poly_env(&r, &env, "q^2 - a").unwrap();
        assert_eq!(p, (&a * &b).pow(2) - a);
    }

    #[test]
    fn rejects_garbage() {
        let r = WeightedRing::unweighted(&["a"]);
        assert!(parse_poly(&r, "a +").is_err());
        assert!(parse_poly(&r, "nope").is_err());
        assert!(parse_poly(&r, "a ^ b").is_err());
    }
}
