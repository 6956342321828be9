use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::links_of;
use crate::syntax::{leaf_steps, AlphaFormula, Letter, OccPath, SequentIL, Side, Step};
use crate::terms::{Term, TypedTerm};

/// Maps the fresh letters of a generalization back to the original ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution(pub BTreeMap<Letter, Letter>);

impl Substitution {
    fn get(&self, l: &Letter) -> Letter {
        self.0.get(l).cloned().unwrap_or_else(|| l.clone())
    }

    pub fn apply_alpha(&self, a: &AlphaFormula) -> AlphaFormula {
        a.rename(&mut |l| self.get(l))
    }

    pub fn apply_sequent(&self, s: &SequentIL) -> SequentIL {
        SequentIL::new(self.apply_alpha(&s.ant), self.apply_alpha(&s.con))
    }

    pub fn apply_term(&self, t: &Term) -> Term {
        t.rename(&mut |l| self.get(l))
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k} := {v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

struct Unifier {
    parent: Vec<usize>,
}

impl Unifier {
    fn find(&mut self, x: usize) -> usize {
        let p = self.parent[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent[x] = r;
        r
    }

    fn union(&mut self, x: usize, y: usize) {
        let (a, b) = (self.find(x), self.find(y));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

fn var(l: &Letter) -> usize {
    l.as_str()[1..].parse().expect("placeholder letter")
}

fn vars(a: &AlphaFormula) -> Vec<usize> {
    leaf_steps(a).iter().map(|(_, l)| var(l)).collect()
}

/// Type of a term whose letters are placeholders, identifying placeholders
/// that meet at a composition.
fn infer(t: &Term, u: &mut Unifier) -> (AlphaFormula, AlphaFormula) {
    match t {
        Term::Comp(g, f) => {
            let (dom, mid) = infer(f, u);
            let (mid2, cod) = infer(g, u);
            for (x, y) in vars(&mid).into_iter().zip(vars(&mid2)) {
                u.union(x, y);
            }
            (dom, cod)
        }
        Term::Tensor(fs) => {
            let ts: Vec<_> = fs.iter().map(|f| infer(f, u)).collect();
            (AlphaFormula::concat(ts.iter().map(|t| &t.0)), AlphaFormula::concat(ts.iter().map(|t| &t.1)))
        }
        Term::Imp(a, f) => {
            let (d, c) = infer(f, u);
            (AlphaFormula::imp(a.clone(), d), AlphaFormula::imp(a.clone(), c))
        }
        prim => {
            let ty = prim.type_of().expect("primitives are well typed");
            (ty.ant, ty.con)
        }
    }
}

fn fresh_name(n: usize) -> Letter {
    let c = (b'a' + (n % 26) as u8) as char;
    if n < 26 {
        Letter::new(&c.to_string())
    } else {
        Letter::new(&format!("{c}{}", n / 26))
    }
}

fn leaf_at(a: &AlphaFormula, steps: &[Step]) -> usize {
    leaf_steps(a).into_iter().find(|(s, _)| s == steps).map(|(_, l)| var(&l)).expect("edge endpoint is a leaf")
}

/// The most general term of which `t` is an instance: one fresh letter per
/// link, named `a`, `b`, `c`, ... in canonical edge order.
pub fn generalize(t: &TypedTerm) -> (TypedTerm, Substitution) {
    let mut originals = Vec::new();
    let placeholder = t.term.rename(&mut |l| {
        originals.push(l.clone());
        Letter::new(&format!("#{}", originals.len() - 1))
    });
    let mut u = Unifier { parent: (0..originals.len()).collect() };
    let (ant, con) = infer(&placeholder, &mut u);

    let mut names: HashMap<usize, Letter> = HashMap::new();
    let mut next = 0;
    let endpoint = |p: &OccPath| match p.side {
        Side::Ant => leaf_at(&ant, &p.steps),
        Side::Con => leaf_at(&con, &p.steps),
    };
    let mut order: Vec<usize> = Vec::new();
    for (a, _) in &links_of(t).edges {
        order.push(endpoint(a));
    }
    order.extend(0..originals.len());
    for v in order {
        let r = u.find(v);
        names.entry(r).or_insert_with(|| {
            next += 1;
            fresh_name(next - 1)
        });
    }

    let mut sub = BTreeMap::new();
    let mut rename = |l: &Letter| {
        let v = var(l);
        let name = names[&u.find(v)].clone();
        sub.insert(name.clone(), originals[v].clone());
        name
    };
    let term = placeholder.rename(&mut rename);
    let ty = SequentIL::new(ant.rename(&mut rename), con.rename(&mut rename));
    (TypedTerm { term, ty }, Substitution(sub))
}

/// The type of the generalization of `t`.
pub fn diversify_type(t: &TypedTerm) -> SequentIL {
    generalize(t).0.ty
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{is_balanced, parse_sequent_il};

    fn tt(s: &str) -> TypedTerm {
        TypedTerm::parse(s).unwrap()
    }

    fn check(src: &str, expected: &str) {
        let t = tt(src);
        let (g, sub) = generalize(&t);
        assert_eq!(g.ty, parse_sequent_il(expected).unwrap(), "{src}");
        assert_eq!(TypedTerm::new(g.term.clone()).unwrap(), g);
        assert!(is_balanced(&g.ty));
        assert_eq!(sub.apply_term(&g.term), t.term);
        assert_eq!(sub.apply_sequent(&g.ty), t.ty);
    }

    #[test]
    fn identity_and_counit() {
        check("1[p]", "a |- a");
        check("eps[p, p]", "a * (a -o b) |- b");
    }

    #[test]
    fn distinguished_pair() {
        check(
            "imp[p]((eps[p, q] * 1[p]) o (1[p] * sym[p, p -o q]) o (sym[p, p] * 1[p -o q])) o eta[p, p * (p -o q)]",
            "a * (a -o b) |- c -o b * c",
        );
        check("imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]", "a * (b -o c) |- b -o c * a");
    }

    #[test]
    fn composite_unifies_interfaces() {
        check("eps[p, p * p] o (1[p] * eta[p, p])", "a * b |- a * b");
        check("1[I]", "I |- I");
    }
}
