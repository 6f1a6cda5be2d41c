//! Tokenizer and recursive-descent parser for basis expressions.

use num_bigint::BigInt;
use qpows_core::{Composition, Rational, SetComposition};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Index {
    Composition(Composition),
    SetComposition(SetComposition),
    Word(Vec<u32>),
}

/// A basis name with an optional explicit order, as in `P^evenodd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisName {
    pub name: String,
    pub order: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Expr(Expr),
    Basis(BasisName),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Rational),
    Atom {
        basis: BasisName,
        index: Index,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Call {
        name: String,
        args: Vec<Arg>,
        pos: usize,
    },
    /// A bare index literal, used as a function argument.
    Literal(Index),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    /// Raw text between `{` and `}`.
    Braced(String),
    /// Raw text between `[` and `]`.
    Bracketed(String),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Int(text.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((
                pos,
                Tok::Ident(chars[start..i].iter().map(|c| c.1).collect()),
            ));
        } else if ch == '^' {
            // Order names may contain `:`.
            i += 1;
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == ':') {
                i += 1;
            }
            if start == i {
                return Err(CliError::syntax(pos, "expected an order name after `^`"));
            }
            out.push((pos, Tok::Sym('^')));
            out.push((
                chars[start].0,
                Tok::Ident(chars[start..i].iter().map(|c| c.1).collect()),
            ));
        } else if ch == '{' || ch == '[' {
            let close = if ch == '{' { '}' } else { ']' };
            let start = i + 1;
            let end = (start..chars.len())
                .find(|&j| chars[j].1 == close)
                .ok_or_else(|| CliError::syntax(pos, format!("unclosed `{ch}`")))?;
            let text: String = chars[start..end].iter().map(|c| c.1).collect();
            out.push((
                pos,
                if ch == '{' {
                    Tok::Braced(text)
                } else {
                    Tok::Bracketed(text)
                },
            ));
            i = end + 1;
        } else if "+-*/(),".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            i += 1;
        } else {
            return Err(CliError::syntax(
                pos,
                format!("unexpected character `{ch}`"),
            ));
        }
    }
    Ok(out)
}

fn parse_composition(text: &str, pos: usize) -> Result<Composition, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Composition::empty());
    }
    let parts = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| CliError::syntax(pos, format!("bad part `{}` in [{text}]", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Composition::new(parts).map_err(|e| CliError::index(pos, e))
}

fn parse_set_composition(text: &str, pos: usize) -> Result<SetComposition, CliError> {
    text.parse().map_err(|e| CliError::index(pos, e))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(CliError::syntax(self.pos(), format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn order_suffix(&mut self) -> Result<Option<String>, CliError> {
        if !self.eat('^') {
            return Ok(None);
        }
        match self.next() {
            Some((_, Tok::Ident(name))) => Ok(Some(name)),
            _ => Err(CliError::syntax(self.pos(), "expected an order name")),
        }
    }

    fn primary(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        match self.next() {
            Some((_, Tok::Int(n))) => {
                if self.eat('/') {
                    match self.next() {
                        Some((_, Tok::Int(d))) if d != BigInt::from(0) => {
                            Ok(Expr::Number(Rational::new(n, d)))
                        }
                        _ => Err(CliError::syntax(pos, "expected a nonzero denominator")),
                    }
                } else {
                    Ok(Expr::Number(Rational::from_integer(n)))
                }
            }
            Some((_, Tok::Sym('('))) => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some((p, Tok::Bracketed(text))) => Ok(Expr::Literal(Index::Composition(
                parse_composition(&text, p)?,
            ))),
            Some((p, Tok::Braced(text))) => Ok(Expr::Literal(Index::SetComposition(
                parse_set_composition(&text, p)?,
            ))),
            Some((_, Tok::Ident(name))) => self.after_ident(name, pos),
            Some((p, t)) => Err(CliError::syntax(p, format!("unexpected {}", describe(&t)))),
            None => Err(CliError::syntax(pos, "unexpected end of input")),
        }
    }

    fn after_ident(&mut self, name: String, pos: usize) -> Result<Expr, CliError> {
        let order = self.order_suffix()?;
        let basis = BasisName {
            name: name.clone(),
            order,
        };
        match self.peek().cloned() {
            Some(Tok::Bracketed(text)) => {
                self.at += 1;
                let index = parse_composition(&text, self.toks[self.at - 1].0)?;
                Ok(Expr::Atom {
                    basis,
                    index: Index::Composition(index),
                })
            }
            Some(Tok::Braced(text)) => {
                self.at += 1;
                let index = parse_set_composition(&text, self.toks[self.at - 1].0)?;
                Ok(Expr::Atom {
                    basis,
                    index: Index::SetComposition(index),
                })
            }
            Some(Tok::Sym('(')) if name == "G" => {
                self.at += 1;
                let mut word = Vec::new();
                if !self.eat(')') {
                    loop {
                        match self.next() {
                            Some((_, Tok::Int(n))) => word.push(
                                u32::try_from(n)
                                    .map_err(|_| CliError::syntax(pos, "letter too large"))?,
                            ),
                            _ => {
                                return Err(CliError::syntax(
                                    self.pos(),
                                    "expected a letter of G(..)",
                                ))
                            }
                        }
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Expr::Atom {
                    basis,
                    index: Index::Word(word),
                })
            }
            Some(Tok::Sym('(')) if basis.order.is_none() => {
                self.at += 1;
                let mut args = Vec::new();
                if !self.eat(')') {
                    loop {
                        args.push(self.arg()?);
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(Expr::Call { name, args, pos })
            }
            _ => Err(CliError::syntax(
                pos,
                format!("`{name}` must be followed by an index or arguments"),
            )),
        }
    }

    /// A basis name alone, as the second argument of `convert`, or an
    /// expression.
    fn arg(&mut self) -> Result<Arg, CliError> {
        if let Some(Tok::Ident(name)) = self.peek().cloned() {
            let save = self.at;
            self.at += 1;
            let order = self.order_suffix()?;
            if matches!(self.peek(), Some(Tok::Sym(',')) | Some(Tok::Sym(')'))) {
                return Ok(Arg::Basis(BasisName { name, order }));
            }
            self.at = save;
        }
        Ok(Arg::Expr(self.expr()?))
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("number {n}"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Braced(s) => format!("`{{{s}}}`"),
        Tok::Bracketed(s) => format!("`[{s}]`"),
    }
}

pub fn parse(input: &str) -> Result<Expr, CliError> {
    let toks = tokenize(input)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: input.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        let (pos, t) = p.toks[p.at].clone();
        return Err(CliError::syntax(
            pos,
            format!("unexpected {}", describe(&t)),
        ));
    }
    Ok(e)
}
