//! Links of a term: the matching of letter occurrences in its type induced
//! by the term, computed compositionally, and the equality test for proper
//! terms that it yields.

mod generalize;
mod render;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::syntax::{signed_occurrences, AlphaFormula, OccPath, SequentIL, Side};
use crate::terms::{Term, TypedTerm};

pub use generalize::{diversify_type, generalize, Substitution};
pub use render::{render, RenderError, RenderFormat};

/// A perfect matching on the letter occurrences of a type, plus the
/// number of closed components lost in gluing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkSet {
    pub ty: SequentIL,
    /// Each pair has its smaller endpoint first; pairs sorted by it.
    pub edges: Vec<(OccPath, OccPath)>,
    pub loops: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("occurrence `{0}` does not address a letter of the type")]
    Dangling(OccPath),
    #[error("occurrence `{0}` is linked more than once")]
    Repeated(OccPath),
    #[error("occurrence `{0}` is not linked")]
    Unlinked(OccPath),
    #[error("`{0}` and `{1}` carry different letters or equal signs")]
    Mismatch(OccPath, OccPath),
}

impl LinkSet {
    /// Build from unordered edges, normalizing the order.
    pub fn new(ty: SequentIL, edges: impl IntoIterator<Item = (OccPath, OccPath)>, loops: usize) -> LinkSet {
        let mut edges: Vec<_> = edges.into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
        edges.sort();
        LinkSet { ty, edges, loops }
    }

    /// Check that the edges form a sign-respecting perfect matching.
    pub fn validate(&self) -> Result<(), LinkError> {
        let occs = signed_occurrences(&self.ty);
        let mut seen = BTreeSet::new();
        for (a, b) in &self.edges {
            let la = a.resolve(&self.ty).ok_or_else(|| LinkError::Dangling(a.clone()))?;
            let lb = b.resolve(&self.ty).ok_or_else(|| LinkError::Dangling(b.clone()))?;
            if la != lb || a.sign() == b.sign() {
                return Err(LinkError::Mismatch(a.clone(), b.clone()));
            }
            for p in [a, b] {
                if !seen.insert(p.clone()) {
                    return Err(LinkError::Repeated(p.clone()));
                }
            }
        }
        match occs.into_iter().find(|o| !seen.contains(&o.path)) {
            Some(o) => Err(LinkError::Unlinked(o.path)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for LinkSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.ty)?;
        for (a, b) in &self.edges {
            write!(f, " {a}~{b}")?;
        }
        if self.loops > 0 {
            write!(f, " loops={}", self.loops)?;
        }
        Ok(())
    }
}

/// Links on flat leaf indices: `0..na` are antecedent leaves and
/// `na..na + nb` consequent leaves, both in occurrence order.
#[derive(Clone, Debug)]
pub(crate) struct Raw {
    pub na: usize,
    pub partner: Vec<usize>,
    pub loops: usize,
}

impl Raw {
    fn new(na: usize, nb: usize) -> Raw {
        Raw { na, partner: vec![usize::MAX; na + nb], loops: 0 }
    }

    fn nb(&self) -> usize {
        self.partner.len() - self.na
    }

    fn link(&mut self, x: usize, y: usize) {
        self.partner[x] = y;
        self.partner[y] = x;
    }

    fn ant(&self, i: usize) -> usize {
        i
    }

    fn con(&self, j: usize) -> usize {
        self.na + j
    }
}

fn identity(n: usize) -> Raw {
    let mut r = Raw::new(n, n);
    for i in 0..n {
        r.link(i, n + i);
    }
    r
}

/// Side by side: `xs[k]` occupies the next antecedent and consequent blocks.
fn juxtapose(xs: &[Raw]) -> Raw {
    let na: usize = xs.iter().map(|x| x.na).sum();
    let nb: usize = xs.iter().map(|x| x.nb()).sum();
    let mut r = Raw::new(na, nb);
    let (mut oa, mut ob) = (0, 0);
    for x in xs {
        let shift = |i: usize| if i < x.na { oa + i } else { na + ob + i - x.na };
        for i in 0..x.partner.len() {
            r.partner[shift(i)] = shift(x.partner[i]);
        }
        r.loops += x.loops;
        oa += x.na;
        ob += x.nb();
    }
    r
}

/// Glue `f: A |- B` to `g: B |- C` along `B`.
fn glue(f: &Raw, g: &Raw) -> Raw {
    let nm = f.nb();
    debug_assert_eq!(nm, g.na);
    let mut r = Raw::new(f.na, g.nb());
    let mut mid_seen = vec![false; nm];
    // Walk from an external endpoint; `in_f` says which term we are in.
    let walk = |mut idx: usize, mut in_f: bool, mid_seen: &mut Vec<bool>| -> usize {
        loop {
            if in_f {
                let p = f.partner[idx];
                if p < f.na {
                    return p;
                }
                let m = p - f.na;
                mid_seen[m] = true;
                idx = m;
                in_f = false;
            } else {
                let p = g.partner[idx];
                if p >= g.na {
                    return f.na + p - g.na;
                }
                mid_seen[p] = true;
                idx = f.na + p;
                in_f = true;
            }
        }
    };
    for i in 0..f.na {
        if r.partner[i] == usize::MAX {
            let end = walk(i, true, &mut mid_seen);
            r.link(i, end);
        }
    }
    for j in 0..g.nb() {
        let x = f.na + j;
        if r.partner[x] == usize::MAX {
            let end = walk(g.na + j, false, &mut mid_seen);
            r.link(x, end);
        }
    }
    r.loops = f.loops + g.loops;
    for m in 0..nm {
        if !mid_seen[m] {
            r.loops += 1;
            let mut cur = m;
            loop {
                mid_seen[cur] = true;
                let p = f.partner[f.na + cur] - f.na;
                mid_seen[p] = true;
                let q = g.partner[p];
                if q == m {
                    break;
                }
                cur = q;
            }
        }
    }
    r
}

fn leaves(a: &AlphaFormula) -> usize {
    a.leaf_count()
}

/// Raw links with the domain and codomain of `t`.
pub(crate) fn raw_links(t: &Term) -> (Raw, AlphaFormula, AlphaFormula) {
    match t {
        Term::Id(a) => (identity(leaves(a)), a.clone(), a.clone()),
        Term::Sym(a, b) => {
            let (la, lb) = (leaves(a), leaves(b));
            let mut r = Raw::new(la + lb, la + lb);
            for i in 0..la {
                let c = r.con(lb + i);
                r.link(r.ant(i), c);
            }
            for j in 0..lb {
                let c = r.con(j);
                r.link(r.ant(la + j), c);
            }
            (r, a.tensor(b), b.tensor(a))
        }
        Term::Eta(a, b) => {
            let (la, lb) = (leaves(a), leaves(b));
            let mut r = Raw::new(lb, 2 * la + lb);
            for i in 0..la {
                let (x, y) = (r.con(i), r.con(la + i));
                r.link(x, y);
            }
            for j in 0..lb {
                let c = r.con(2 * la + j);
                r.link(r.ant(j), c);
            }
            (r, b.clone(), AlphaFormula::imp(a.clone(), a.tensor(b)))
        }
        Term::Eps(a, b) => {
            let (la, lb) = (leaves(a), leaves(b));
            let mut r = Raw::new(2 * la + lb, lb);
            for i in 0..la {
                r.link(i, la + i);
            }
            for j in 0..lb {
                let c = r.con(j);
                r.link(2 * la + j, c);
            }
            (r, a.tensor(&AlphaFormula::imp(a.clone(), b.clone())), b.clone())
        }
        Term::Comp(g, f) => {
            let (rf, dom, _) = raw_links(f);
            let (rg, _, cod) = raw_links(g);
            (glue(&rf, &rg), dom, cod)
        }
        Term::Tensor(fs) => {
            let parts: Vec<_> = fs.iter().map(raw_links).collect();
            let raws: Vec<Raw> = parts.iter().map(|p| p.0.clone()).collect();
            let dom = AlphaFormula::concat(parts.iter().map(|p| &p.1));
            let cod = AlphaFormula::concat(parts.iter().map(|p| &p.2));
            (juxtapose(&raws), dom, cod)
        }
        Term::Imp(a, f) => {
            let (rf, dom, cod) = raw_links(f);
            let r = juxtapose(&[identity(leaves(a)), rf]);
            (r, AlphaFormula::imp(a.clone(), dom), AlphaFormula::imp(a.clone(), cod))
        }
    }
}

fn paths(a: &AlphaFormula, side: Side) -> Vec<OccPath> {
    crate::syntax::leaf_steps(a).into_iter().map(|(steps, _)| OccPath::new(side, steps)).collect()
}

/// The links of a typed term.
pub fn links_of(t: &TypedTerm) -> LinkSet {
    let (raw, _, _) = raw_links(&t.term);
    let ps: Vec<OccPath> = paths(&t.ty.ant, Side::Ant).into_iter().chain(paths(&t.ty.con, Side::Con)).collect();
    let edges = (0..ps.len())
        .filter(|&i| i < raw.partner[i])
        .map(|i| (ps[i].clone(), ps[raw.partner[i]].clone()));
    LinkSet::new(t.ty.clone(), edges, raw.loops)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqVerdict {
    Equal,
    NotEqual,
    TypeMismatch,
    /// The common type is not proper, where links do not decide equality.
    Unsupported,
}

/// Decide equality of two proper terms by comparing their links.
pub fn eq_terms(f: &TypedTerm, g: &TypedTerm) -> EqVerdict {
    if f.ty != g.ty {
        return EqVerdict::TypeMismatch;
    }
    if !f.ty.is_proper() {
        return EqVerdict::Unsupported;
    }
    if links_of(f) == links_of(g) {
        EqVerdict::Equal
    } else {
        EqVerdict::NotEqual
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent_il;

    fn tt(s: &str) -> TypedTerm {
        TypedTerm::parse(s).unwrap()
    }

    fn edges(l: &LinkSet) -> Vec<(String, String)> {
        l.edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    fn e(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    const F: &str = "imp[p]((eps[p, q] * 1[p]) o (1[p] * sym[p, p -o q]) o (sym[p, p] * 1[p -o q])) o eta[p, p * (p -o q)]";
    const G: &str = "imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]";

    #[test]
    fn identity_links() {
        let l = links_of(&tt("1[p]"));
        assert_eq!(edges(&l), e(&[("ant.1", "con.1")]));
        assert_eq!(l.loops, 0);
    }

    #[test]
    fn distinguished_pair() {
        let f = links_of(&tt(F));
        assert_eq!(f.ty, parse_sequent_il("p * (p -o q) |- p -o q * p").unwrap());
        assert_eq!(
            edges(&f),
            e(&[("ant.1", "ant.2.d.1"), ("ant.2.c.1", "con.1.c.1"), ("con.1.d.1", "con.1.c.2")])
        );
        let g = links_of(&tt(G));
        assert_eq!(
            edges(&g),
            e(&[("ant.1", "con.1.c.2"), ("ant.2.d.1", "con.1.d.1"), ("ant.2.c.1", "con.1.c.1")])
        );
        assert_eq!(eq_terms(&tt(F), &tt(G)), EqVerdict::NotEqual);
        f.validate().unwrap();
        g.validate().unwrap();
    }

    #[test]
    fn unit_terms_are_equal() {
        assert_eq!(eq_terms(&tt("eps[I, I] o eta[I, I]"), &tt("1[I]")), EqVerdict::Equal);
        assert!(links_of(&tt("1[I]")).edges.is_empty());
    }

    #[test]
    fn verdicts_for_bad_inputs() {
        assert_eq!(eq_terms(&tt("1[p]"), &tt("1[q]")), EqVerdict::TypeMismatch);
        let f = tt("eps[p, I]");
        assert_eq!(eq_terms(&f, &f), EqVerdict::Unsupported);
    }

    #[test]
    fn gluing_is_associative() {
        let h = "sym[q, p]";
        let g = "sym[p, q]";
        let f = "sym[q, p]";
        let a = links_of(&tt(&format!("{h} o ({g} o {f})")));
        let b = links_of(&tt(&format!("({h} o {g}) o {f}")));
        assert_eq!(a, b);
    }

    #[test]
    fn validation_catches_bad_sets() {
        let ty = parse_sequent_il("p |- q").unwrap();
        let l = LinkSet::new(ty, [("ant.1".parse().unwrap(), "con.1".parse().unwrap())], 0);
        assert!(matches!(l.validate(), Err(LinkError::Mismatch(..))));
    }
}
