//! Tokenizer and recursive-descent parser shared by the formula, sequent,
//! term and derivation syntaxes.

use thiserror::Error;

use super::formula::Formula;
use super::sequent::{SequentIL, SequentS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokKind {
    Ident(String),
    Number(usize),
    Unit,
    Star,
    Lolli,
    Turnstile,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokKind,
    pub pos: usize,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'*' => TokKind::Star,
            b'(' => TokKind::LParen,
            b')' => TokKind::RParen,
            b'[' => TokKind::LBrack,
            b']' => TokKind::RBrack,
            b',' => TokKind::Comma,
            b'I' => TokKind::Unit,
            b'-' if bytes.get(i + 1) == Some(&b'o') => {
                i += 1;
                TokKind::Lolli
            }
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                i += 1;
                TokKind::Turnstile
            }
            b'a'..=b'z' => {
                let start = i;
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_lowercase() || bytes[i + 1].is_ascii_digit()) {
                    i += 1;
                }
                TokKind::Ident(text[start..=i].to_string())
            }
            b'0'..=b'9' => {
                let start = i;
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..=i]
                    .parse()
                    .map_err(|_| ParseError::new(start, "number out of range"))?;
                TokKind::Number(n)
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(pos, format!("unexpected character {ch:?}")));
            }
        };
        out.push(Token { kind, pos });
        i += 1;
    }
    out.push(Token { kind: TokKind::Eof, pos: text.len() });
    Ok(out)
}

pub struct Parser {
    toks: Vec<Token>,
    idx: usize,
}

impl Parser {
    pub fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(text)?, idx: 0 })
    }

    pub fn peek(&self) -> &TokKind {
        &self.toks[self.idx].kind
    }

    pub fn peek_at(&self, k: usize) -> &TokKind {
        let i = (self.idx + k).min(self.toks.len() - 1);
        &self.toks[i].kind
    }

    pub fn pos(&self) -> usize {
        self.toks[self.idx].pos
    }

    pub fn bump(&mut self) -> TokKind {
        let k = self.toks[self.idx].kind.clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        k
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos(), msg)
    }

    pub fn eat(&mut self, kind: &TokKind) -> bool {
        if self.peek() == kind {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, kind: &TokKind, what: &str) -> Result<(), ParseError> {
        if self.eat(kind) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}, found {}", describe(self.peek()))))
        }
    }

    pub fn expect_eof(&self) -> Result<(), ParseError> {
        if *self.peek() == TokKind::Eof {
            Ok(())
        } else {
            Err(self.error(format!("unexpected {}", describe(self.peek()))))
        }
    }

    pub fn expect_number(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            TokKind::Number(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            other => Err(self.error(format!("expected a number, found {}", describe(other)))),
        }
    }

    pub fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.tensor()?;
        if self.eat(&TokKind::Lolli) {
            let rhs = self.formula()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn tensor(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.atom()?;
        while self.eat(&TokKind::Star) {
            let rhs = self.atom()?;
            acc = Formula::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            TokKind::Ident(name) => {
                self.bump();
                Ok(Formula::letter(&name))
            }
            TokKind::Unit => {
                self.bump();
                Ok(Formula::Unit)
            }
            TokKind::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(&TokKind::RParen, "')'")?;
                Ok(f)
            }
            other => Err(self.error(format!("expected a formula, found {}", describe(&other)))),
        }
    }

    pub fn sequent_s(&mut self) -> Result<SequentS, ParseError> {
        let mut antecedent = Vec::new();
        if *self.peek() != TokKind::Turnstile {
            antecedent.push(self.formula()?);
            while self.eat(&TokKind::Comma) {
                antecedent.push(self.formula()?);
            }
        }
        self.expect(&TokKind::Turnstile, "'|-'")?;
        let consequent = self.formula()?;
        Ok(SequentS { antecedent, consequent })
    }

    /// `A |- B`; an empty antecedent stands for `I`.
    pub fn sequent_il(&mut self) -> Result<SequentIL, ParseError> {
        let ant = if *self.peek() == TokKind::Turnstile {
            Formula::Unit
        } else {
            self.formula()?
        };
        self.expect(&TokKind::Turnstile, "'|-'")?;
        let con = self.formula()?;
        Ok(SequentIL::new(ant.alpha(), con.alpha()))
    }
}

pub fn describe(k: &TokKind) -> String {
    match k {
        TokKind::Ident(s) => format!("'{s}'"),
        TokKind::Number(n) => format!("'{n}'"),
        TokKind::Unit => "'I'".into(),
        TokKind::Star => "'*'".into(),
        TokKind::Lolli => "'-o'".into(),
        TokKind::Turnstile => "'|-'".into(),
        TokKind::LParen => "'('".into(),
        TokKind::RParen => "')'".into(),
        TokKind::LBrack => "'['".into(),
        TokKind::RBrack => "']'".into(),
        TokKind::Comma => "','".into(),
        TokKind::Eof => "end of input".into(),
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.expect_eof()?;
    Ok(f)
}

pub fn parse_sequent_s(text: &str) -> Result<SequentS, ParseError> {
    let mut p = Parser::new(text)?;
    let s = p.sequent_s()?;
    p.expect_eof()?;
    Ok(s)
}

pub fn parse_sequent_il(text: &str) -> Result<SequentIL, ParseError> {
    let mut p = Parser::new(text)?;
    let s = p.sequent_il()?;
    p.expect_eof()?;
    Ok(s)
}
