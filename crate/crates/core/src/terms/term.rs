use std::fmt;

use thiserror::Error;

use crate::syntax::{AlphaFormula, ParseError, Parser, Prime, SequentIL, TokKind};

/// Proof terms. `Comp(after, before)` is `after o before`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Id(AlphaFormula),
    /// `A * B |- B * A`
    Sym(AlphaFormula, AlphaFormula),
    /// `B |- A -o (A * B)`
    Eta(AlphaFormula, AlphaFormula),
    /// `A * (A -o B) |- B`
    Eps(AlphaFormula, AlphaFormula),
    Comp(Box<Term>, Box<Term>),
    /// At least two factors, none a tensor and none `Id(I)`.
    Tensor(Vec<Term>),
    Imp(AlphaFormula, Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("cannot compose: `{after}` expects `{expected}` but `{before}` yields `{found}`")]
    Mismatch {
        after: String,
        before: String,
        expected: AlphaFormula,
        found: AlphaFormula,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Type(#[from] TypeError),
}

impl Term {
    pub fn id(a: AlphaFormula) -> Term {
        Term::Id(a)
    }

    pub fn is_id(&self) -> bool {
        matches!(self, Term::Id(_))
    }

    /// Number of primitive and operator nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Id(_) | Term::Sym(..) | Term::Eta(..) | Term::Eps(..) => 1,
            Term::Comp(g, f) => 1 + g.size() + f.size(),
            Term::Tensor(fs) => 1 + fs.iter().map(Term::size).sum::<usize>(),
            Term::Imp(_, f) => 1 + f.size(),
        }
    }

    /// Free of `eta`, `eps` and `imp`.
    pub fn is_central(&self) -> bool {
        match self {
            Term::Id(_) | Term::Sym(..) => true,
            Term::Eta(..) | Term::Eps(..) | Term::Imp(..) => false,
            Term::Comp(g, f) => g.is_central() && f.is_central(),
            Term::Tensor(fs) => fs.iter().all(Term::is_central),
        }
    }

    pub fn type_of(&self) -> Result<SequentIL, TypeError> {
        Ok(match self {
            Term::Id(a) => SequentIL::new(a.clone(), a.clone()),
            Term::Sym(a, b) => SequentIL::new(a.tensor(b), b.tensor(a)),
            Term::Eta(a, b) => SequentIL::new(b.clone(), AlphaFormula::imp(a.clone(), a.tensor(b))),
            Term::Eps(a, b) => SequentIL::new(a.tensor(&AlphaFormula::imp(a.clone(), b.clone())), b.clone()),
            Term::Comp(g, f) => {
                let tf = f.type_of()?;
                let tg = g.type_of()?;
                if tf.con != tg.ant {
                    return Err(TypeError::Mismatch {
                        after: g.to_string(),
                        before: f.to_string(),
                        expected: tg.ant,
                        found: tf.con,
                    });
                }
                SequentIL::new(tf.ant, tg.con)
            }
            Term::Tensor(fs) => {
                let mut ant = Vec::new();
                let mut con = Vec::new();
                for f in fs {
                    let t = f.type_of()?;
                    ant.extend(t.ant.factors().iter().cloned());
                    con.extend(t.con.factors().iter().cloned());
                }
                SequentIL::new(AlphaFormula::new(ant), AlphaFormula::new(con))
            }
            Term::Imp(a, f) => {
                let t = f.type_of()?;
                SequentIL::new(AlphaFormula::imp(a.clone(), t.ant), AlphaFormula::imp(a.clone(), t.con))
            }
        })
    }

    /// Rename every letter in every index.
    pub fn rename(&self, map: &mut impl FnMut(&crate::syntax::Letter) -> crate::syntax::Letter) -> Term {
        match self {
            Term::Id(a) => Term::Id(a.rename(map)),
            Term::Sym(a, b) => Term::Sym(a.rename(map), b.rename(map)),
            Term::Eta(a, b) => Term::Eta(a.rename(map), b.rename(map)),
            Term::Eps(a, b) => Term::Eps(a.rename(map), b.rename(map)),
            Term::Comp(g, f) => Term::Comp(Box::new(g.rename(map)), Box::new(f.rename(map))),
            Term::Tensor(fs) => Term::Tensor(fs.iter().map(|f| f.rename(map)).collect()),
            Term::Imp(a, f) => Term::Imp(a.rename(map), Box::new(f.rename(map))),
        }
    }
}

/// Tensor that keeps the factor list flat and drops `Id(I)`.
pub fn smart_tensor(f: Term, g: Term) -> Term {
    tensor_all(vec![f, g])
}

pub fn tensor_all(parts: Vec<Term>) -> Term {
    let mut out = Vec::new();
    for p in parts {
        match p {
            Term::Tensor(fs) => out.extend(fs),
            Term::Id(a) if a.is_unit() => {}
            other => out.push(other),
        }
    }
    match out.len() {
        0 => Term::Id(AlphaFormula::unit()),
        1 => out.pop().unwrap(),
        _ => Term::Tensor(out),
    }
}

/// `g o f`, checked; no simplification.
pub fn smart_comp(g: Term, f: Term) -> Result<Term, TypeError> {
    let t = Term::Comp(Box::new(g), Box::new(f));
    t.type_of()?;
    Ok(t)
}

/// `g o f` without a type check, for callers that know the types agree.
pub fn comp(g: Term, f: Term) -> Term {
    Term::Comp(Box::new(g), Box::new(f))
}

/// Right-nested composition of `parts`, listed in order of application.
pub fn comp_chain(dom: &AlphaFormula, parts: Vec<Term>) -> Term {
    let mut it = parts.into_iter();
    let Some(mut acc) = it.next() else {
        return Term::Id(dom.clone());
    };
    for t in it {
        acc = comp(t, acc);
    }
    acc
}

pub fn smart_imp(a: AlphaFormula, f: Term) -> Term {
    Term::Imp(a, Box::new(f))
}

/// A term with its type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypedTerm {
    pub term: Term,
    pub ty: SequentIL,
}

impl TypedTerm {
    pub fn new(term: Term) -> Result<Self, TypeError> {
        let ty = term.type_of()?;
        Ok(TypedTerm { term, ty })
    }

    pub fn parse(text: &str) -> Result<Self, TermError> {
        Ok(TypedTerm::new(parse_term(text)?)?)
    }
}

impl fmt::Display for TypedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {}", self.term, self.ty)
    }
}

pub fn type_of(t: &Term) -> Result<SequentIL, TypeError> {
    t.type_of()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Id(a) => write!(f, "1[{a}]"),
            Term::Sym(a, b) => write!(f, "sym[{a}, {b}]"),
            Term::Eta(a, b) => write!(f, "eta[{a}, {b}]"),
            Term::Eps(a, b) => write!(f, "eps[{a}, {b}]"),
            Term::Comp(g, h) => {
                if matches!(**g, Term::Comp(..) | Term::Tensor(..)) {
                    write!(f, "({g})")?;
                } else {
                    write!(f, "{g}")?;
                }
                if matches!(**h, Term::Tensor(..)) {
                    write!(f, " o ({h})")
                } else {
                    write!(f, " o {h}")
                }
            }
            Term::Tensor(fs) => {
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    if matches!(t, Term::Comp(..) | Term::Tensor(..)) {
                        write!(f, "({t})")?;
                    } else {
                        write!(f, "{t}")?;
                    }
                }
                Ok(())
            }
            Term::Imp(a, t) => write!(f, "imp[{a}]({t})"),
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = comp_expr(&mut p)?;
    p.expect_eof()?;
    Ok(t)
}

fn is_o(k: &TokKind) -> bool {
    matches!(k, TokKind::Ident(s) if s == "o")
}

fn comp_expr(p: &mut Parser) -> Result<Term, ParseError> {
    let lhs = tensor_expr(p)?;
    if is_o(p.peek()) {
        p.bump();
        let rhs = comp_expr(p)?;
        Ok(comp(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn tensor_expr(p: &mut Parser) -> Result<Term, ParseError> {
    let mut parts = vec![atom(p)?];
    while p.eat(&TokKind::Star) {
        parts.push(atom(p)?);
    }
    if parts.len() == 1 {
        return Ok(parts.pop().unwrap());
    }
    Ok(tensor_all(parts))
}

fn bracketed(p: &mut Parser, n: usize) -> Result<Vec<AlphaFormula>, ParseError> {
    p.expect(&TokKind::LBrack, "'['")?;
    let mut out = vec![p.formula()?.alpha()];
    for _ in 1..n {
        p.expect(&TokKind::Comma, "','")?;
        out.push(p.formula()?.alpha());
    }
    p.expect(&TokKind::RBrack, "']'")?;
    Ok(out)
}

fn atom(p: &mut Parser) -> Result<Term, ParseError> {
    let pos = p.pos();
    match p.peek().clone() {
        TokKind::Number(1) => {
            p.bump();
            let mut a = bracketed(p, 1)?;
            Ok(Term::Id(a.remove(0)))
        }
        TokKind::Ident(name) if matches!(name.as_str(), "sym" | "eta" | "eps") => {
            p.bump();
            let mut ab = bracketed(p, 2)?;
            let b = ab.pop().unwrap();
            let a = ab.pop().unwrap();
            Ok(match name.as_str() {
                "sym" => Term::Sym(a, b),
                "eta" => Term::Eta(a, b),
                _ => Term::Eps(a, b),
            })
        }
        TokKind::Ident(name) if name == "imp" => {
            p.bump();
            let mut a = bracketed(p, 1)?;
            p.expect(&TokKind::LParen, "'('")?;
            let body = comp_expr(p)?;
            p.expect(&TokKind::RParen, "')'")?;
            Ok(Term::Imp(a.remove(0), Box::new(body)))
        }
        TokKind::LParen => {
            p.bump();
            let t = comp_expr(p)?;
            p.expect(&TokKind::RParen, "')'")?;
            Ok(t)
        }
        other => Err(ParseError::new(
            pos,
            format!("expected a term, found {}", crate::syntax::describe(&other)),
        )),
    }
}

/// The prime `A -o B` as a one-factor α-formula.
pub fn imp_alpha(a: &AlphaFormula, b: &AlphaFormula) -> AlphaFormula {
    AlphaFormula::prime(Prime::Imp(a.clone(), b.clone()))
}
