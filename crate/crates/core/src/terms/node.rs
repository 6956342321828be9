//! Canonical representation of terms used by the rewriting oracle.
//!
//! Composition is an n-ary chain listed in application order and never
//! contains identities; tensors are flat, never contain `Id(I)`, and merge
//! adjacent identities; `imp[A](1[B])` is `1[A -o B]`; `sym` with a unit
//! side is an identity. Each of these is an instance of an equation of the
//! congruence, so equal canonical forms mean equal terms.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::term::{comp_chain, Term};
use crate::syntax::AlphaFormula;

#[derive(Clone, PartialEq, Eq)]
pub enum Kind {
    Id,
    Sym(AlphaFormula, AlphaFormula),
    Eta(AlphaFormula, AlphaFormula),
    Eps(AlphaFormula, AlphaFormula),
    /// Application order: the first element is applied first.
    Chain(Vec<N>),
    Tensor(Vec<N>),
    Imp(AlphaFormula, N),
}

pub struct Inner {
    pub kind: Kind,
    pub dom: AlphaFormula,
    pub cod: AlphaFormula,
    hash: u64,
    pub size: usize,
}

#[derive(Clone)]
pub struct N(Arc<Inner>);

impl PartialEq for N {
    fn eq(&self, other: &N) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.hash == other.0.hash
                && self.0.size == other.0.size
                && self.0.kind == other.0.kind
                && self.0.dom == other.0.dom
                && self.0.cod == other.0.cod)
    }
}

impl Eq for N {}

impl Hash for N {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl std::ops::Deref for N {
    type Target = Inner;
    fn deref(&self) -> &Inner {
        &self.0
    }
}

impl fmt::Debug for N {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_term())
    }
}

fn mk(kind: Kind, dom: AlphaFormula, cod: AlphaFormula) -> N {
    let mut h = DefaultHasher::new();
    let size = match &kind {
        Kind::Id => {
            0u8.hash(&mut h);
            dom.hash(&mut h);
            1
        }
        Kind::Sym(a, b) => {
            1u8.hash(&mut h);
            a.hash(&mut h);
            b.hash(&mut h);
            1
        }
        Kind::Eta(a, b) => {
            2u8.hash(&mut h);
            a.hash(&mut h);
            b.hash(&mut h);
            1
        }
        Kind::Eps(a, b) => {
            3u8.hash(&mut h);
            a.hash(&mut h);
            b.hash(&mut h);
            1
        }
        Kind::Chain(xs) => {
            4u8.hash(&mut h);
            for x in xs {
                x.0.hash.hash(&mut h);
            }
            xs.len() - 1 + xs.iter().map(|x| x.size).sum::<usize>()
        }
        Kind::Tensor(xs) => {
            5u8.hash(&mut h);
            for x in xs {
                x.0.hash.hash(&mut h);
            }
            1 + xs.iter().map(|x| x.size).sum::<usize>()
        }
        Kind::Imp(a, x) => {
            6u8.hash(&mut h);
            a.hash(&mut h);
            x.0.hash.hash(&mut h);
            1 + x.size
        }
    };
    N(Arc::new(Inner { kind, dom, cod, hash: h.finish(), size }))
}

impl N {
    pub fn id(a: AlphaFormula) -> N {
        mk(Kind::Id, a.clone(), a)
    }

    pub fn sym(a: AlphaFormula, b: AlphaFormula) -> N {
        if a.is_unit() || b.is_unit() {
            return N::id(a.tensor(&b));
        }
        let (dom, cod) = (a.tensor(&b), b.tensor(&a));
        mk(Kind::Sym(a, b), dom, cod)
    }

    pub fn eta(a: AlphaFormula, b: AlphaFormula) -> N {
        let cod = AlphaFormula::imp(a.clone(), a.tensor(&b));
        mk(Kind::Eta(a, b.clone()), b, cod)
    }

    pub fn eps(a: AlphaFormula, b: AlphaFormula) -> N {
        let dom = a.tensor(&AlphaFormula::imp(a.clone(), b.clone()));
        mk(Kind::Eps(a, b.clone()), dom, b)
    }

    /// Compose in application order. The caller guarantees matching types.
    pub fn chain(dom: &AlphaFormula, parts: impl IntoIterator<Item = N>) -> N {
        let mut out: Vec<N> = Vec::new();
        for p in parts {
            match &p.kind {
                Kind::Id => {}
                Kind::Chain(xs) => out.extend(xs.iter().cloned()),
                _ => out.push(p),
            }
        }
        match out.len() {
            0 => N::id(dom.clone()),
            1 => out.pop().unwrap(),
            _ => {
                let d = out[0].dom.clone();
                let c = out[out.len() - 1].cod.clone();
                mk(Kind::Chain(out), d, c)
            }
        }
    }

    pub fn tensor(parts: impl IntoIterator<Item = N>) -> N {
        let mut out: Vec<N> = Vec::new();
        let push = |x: N, out: &mut Vec<N>| {
            if let Kind::Id = x.kind {
                if x.dom.is_unit() {
                    return;
                }
                if let Some(last) = out.last() {
                    if let Kind::Id = last.kind {
                        let merged = last.dom.tensor(&x.dom);
                        *out.last_mut().unwrap() = N::id(merged);
                        return;
                    }
                }
            }
            out.push(x);
        };
        for p in parts {
            match &p.kind {
                Kind::Tensor(xs) => {
                    for x in xs {
                        push(x.clone(), &mut out);
                    }
                }
                _ => push(p, &mut out),
            }
        }
        match out.len() {
            0 => N::id(AlphaFormula::unit()),
            1 => out.pop().unwrap(),
            _ => {
                let dom = AlphaFormula::concat(out.iter().map(|x| &x.dom));
                let cod = AlphaFormula::concat(out.iter().map(|x| &x.cod));
                mk(Kind::Tensor(out), dom, cod)
            }
        }
    }

    pub fn imp(a: AlphaFormula, body: N) -> N {
        if let Kind::Id = body.kind {
            return N::id(AlphaFormula::imp(a, body.dom.clone()));
        }
        let dom = AlphaFormula::imp(a.clone(), body.dom.clone());
        let cod = AlphaFormula::imp(a.clone(), body.cod.clone());
        mk(Kind::Imp(a, body), dom, cod)
    }

    pub fn is_id(&self) -> bool {
        matches!(self.kind, Kind::Id)
    }

    /// Tensor factors, with identities split into one factor per prime.
    pub fn exploded(&self) -> Vec<N> {
        let single = [self.clone()];
        let xs: &[N] = match &self.kind {
            Kind::Tensor(xs) => xs,
            _ => &single,
        };
        let mut out = Vec::new();
        for x in xs {
            if x.is_id() {
                for p in x.dom.factors() {
                    out.push(N::id(AlphaFormula::prime(p.clone())));
                }
            } else {
                out.push(x.clone());
            }
        }
        out
    }

    pub fn from_term(t: &Term) -> N {
        match t {
            Term::Id(a) => N::id(a.clone()),
            Term::Sym(a, b) => N::sym(a.clone(), b.clone()),
            Term::Eta(a, b) => N::eta(a.clone(), b.clone()),
            Term::Eps(a, b) => N::eps(a.clone(), b.clone()),
            Term::Comp(g, f) => {
                let f = N::from_term(f);
                let g = N::from_term(g);
                let dom = f.dom.clone();
                N::chain(&dom, [f, g])
            }
            Term::Tensor(xs) => N::tensor(xs.iter().map(N::from_term)),
            Term::Imp(a, f) => N::imp(a.clone(), N::from_term(f)),
        }
    }

    pub fn to_term(&self) -> Term {
        match &self.kind {
            Kind::Id => Term::Id(self.dom.clone()),
            Kind::Sym(a, b) => Term::Sym(a.clone(), b.clone()),
            Kind::Eta(a, b) => Term::Eta(a.clone(), b.clone()),
            Kind::Eps(a, b) => Term::Eps(a.clone(), b.clone()),
            Kind::Chain(xs) => comp_chain(&self.dom, xs.iter().map(N::to_term).collect()),
            Kind::Tensor(xs) => Term::Tensor(xs.iter().map(N::to_term).collect()),
            Kind::Imp(a, x) => Term::Imp(a.clone(), Box::new(x.to_term())),
        }
    }
}
