//! Recursive-descent parser for the polynomial text format.
//!
//! Grammar (whitespace ignored):
//! ```text
//! expr   := [+|-] term  ((+|-) term)*
//! term   := factor (* factor)*
//! factor := atom [^ uint]
//! atom   := ( expr ) | variable | number
//! number := digits [/ digits]
//! ```
//! Multiplication must be written explicitly; `2st` is a syntax error.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{SparsePoly, VarSet};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Int(BigInt),
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> Result<Option<(usize, Tok)>> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok(Some((start, Tok::Int(text.parse().unwrap()))));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok(Some((start, Tok::Ident(text.to_string()))));
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    cursor: usize,
    vars: VarSet,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == tok => Ok(()),
            other => Err(Error::Syntax {
                pos,
                msg: format!("expected {:?}, found {:?}", tok, other),
            }),
        }
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp: u32 = n.try_into().map_err(|_| Error::Syntax {
                        pos,
                        msg: "exponent too large".to_string(),
                    })?;
                    Ok(base.pow(exp))
                }
                Some(Tok::Minus) => Err(Error::NegativeExponent(pos)),
                other => Err(Error::Syntax {
                    pos,
                    msg: format!("expected exponent, found {:?}", other),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(SparsePoly::variable(self.vars, i)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(Error::Syntax {
                                    pos: dpos,
                                    msg: "zero denominator".to_string(),
                                });
                            }
                            Ok(SparsePoly::constant(self.vars, Rat::new(n, d)))
                        }
                        other => Err(Error::Syntax {
                            pos: dpos,
                            msg: format!("expected denominator, found {:?}", other),
                        }),
                    }
                } else {
                    Ok(SparsePoly::constant(self.vars, Rat::from_integer(n)))
                }
            }
            other => Err(Error::Syntax {
                pos,
                msg: format!("expected `(`, variable or number, found {:?}", other),
            }),
        }
    }
}

/// Parses `text` over the given variable set into canonical sparse form.
pub fn parse_poly(text: &str, vars: VarSet) -> Result<SparsePoly> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    let mut parser = Parser {
        toks,
        cursor: 0,
        vars,
        end: text.len(),
    };
    let poly = parser.expr()?;
    if parser.cursor != parser.toks.len() {
        return Err(Error::Syntax {
            pos: parser.pos(),
            msg: format!("trailing input, found {:?}", parser.peek()),
        });
    }
    Ok(poly)
}
