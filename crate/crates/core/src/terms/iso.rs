//! Invertible terms that remove constant material from a type.

use thiserror::Error;

use super::term::{comp, tensor_all, Term};
use crate::syntax::{AlphaFormula, Prime};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("`{0}` is not constant")]
    NotConstant(AlphaFormula),
    #[error("`{0}` is not proper")]
    NotProper(AlphaFormula),
    #[error("`{0}` is constant")]
    Constant(AlphaFormula),
}

/// `eps[I, A]` and `eta[I, A]`, which are mutually inverse.
pub fn eta_eps_i_inverse(a: &AlphaFormula) -> (Term, Term) {
    let i = AlphaFormula::unit();
    (Term::Eps(i.clone(), a.clone()), Term::Eta(i, a.clone()))
}

/// Compose in order of application, skipping identities.
fn seq(dom: &AlphaFormula, parts: Vec<Term>) -> Term {
    let mut acc: Option<Term> = None;
    for t in parts.into_iter().filter(|t| !t.is_id()) {
        acc = Some(match acc {
            None => t,
            Some(f) => comp(t, f),
        });
    }
    acc.unwrap_or_else(|| Term::Id(dom.clone()))
}

/// An invertible `f: A |- I` and its inverse, for constant `A`.
pub fn iso_const(a: &AlphaFormula) -> Result<(Term, Term), IsoError> {
    if !a.is_constant() {
        return Err(IsoError::NotConstant(a.clone()));
    }
    let (fs, gs): (Vec<Term>, Vec<Term>) = a.factors().iter().map(const_prime).unzip();
    Ok((tensor_all(fs), tensor_all(gs)))
}

fn const_prime(p: &Prime) -> (Term, Term) {
    let Prime::Imp(a1, a2) = p else {
        unreachable!("constant primes are implications")
    };
    let (f1, f1inv) = iso_const(a1).unwrap();
    let (f2, f2inv) = iso_const(a2).unwrap();
    let i = AlphaFormula::unit();
    let (fwd, back) = imp_iso(a1, a2, &i, (f1, f1inv), (f2, f2inv));
    let (eps, eta) = eta_eps_i_inverse(&i);
    let src = AlphaFormula::prime(p.clone());
    (seq(&src, vec![fwd, eps]), seq(&i, vec![eta, back]))
}

/// Given invertible `f1: A1 |- A1'` and `f2: A2 |- A2'`, the invertible
/// `A1 -o A2 |- A1' -o A2'` and its inverse.
fn imp_iso(
    a1: &AlphaFormula,
    a2: &AlphaFormula,
    a1p: &AlphaFormula,
    (f1, f1inv): (Term, Term),
    (f2, f2inv): (Term, Term),
) -> (Term, Term) {
    let src = AlphaFormula::imp(a1.clone(), a2.clone());
    let a2p = match f2.type_of() {
        Ok(t) => t.con,
        Err(_) => unreachable!("iso pieces are well typed"),
    };
    let tgt = AlphaFormula::imp(a1p.clone(), a2p.clone());
    // a1p -o (f2 o eps[A1, A2] o (f1inv * 1)) o eta[A1', A1 -o A2]
    let body = seq(
        &a1p.tensor(&src),
        vec![
            tensor_all(vec![f1inv, Term::Id(src.clone())]),
            Term::Eps(a1.clone(), a2.clone()),
            f2,
        ],
    );
    let fwd = seq(&src, vec![Term::Eta(a1p.clone(), src.clone()), imp_elided(a1p, body)]);
    // (A1 -o (eps[A1', A2] o (f1 * 1))) o eta[A1, A1' -o A2] o (A1' -o f2inv)
    let mid = AlphaFormula::imp(a1p.clone(), a2.clone());
    let body = seq(
        &a1.tensor(&mid),
        vec![tensor_all(vec![f1, Term::Id(mid.clone())]), Term::Eps(a1p.clone(), a2.clone())],
    );
    let back = seq(
        &tgt,
        vec![imp_elided(a1p, f2inv), Term::Eta(a1.clone(), mid), imp_elided(a1, body)],
    );
    (fwd, back)
}

fn imp_elided(a: &AlphaFormula, body: Term) -> Term {
    match body {
        Term::Id(b) => Term::Id(AlphaFormula::imp(a.clone(), b)),
        body => Term::Imp(a.clone(), Box::new(body)),
    }
}

/// For proper, non-constant `A`: a unit-free `A'` with an invertible
/// `u: A |- A'` and its inverse.
pub fn strip_const(a: &AlphaFormula) -> Result<(AlphaFormula, Term, Term), IsoError> {
    if !a.is_proper() {
        return Err(IsoError::NotProper(a.clone()));
    }
    if a.is_constant() {
        return Err(IsoError::Constant(a.clone()));
    }
    Ok(strip(a))
}

fn strip(a: &AlphaFormula) -> (AlphaFormula, Term, Term) {
    let mut primes = Vec::new();
    let mut us = Vec::new();
    let mut vs = Vec::new();
    for p in a.factors() {
        let (ap, u, v) = if p.is_constant() {
            let (u, v) = const_prime(p);
            (AlphaFormula::unit(), u, v)
        } else {
            strip_prime(p)
        };
        primes.extend(ap.factors().iter().cloned());
        us.push(u);
        vs.push(v);
    }
    (AlphaFormula::new(primes), tensor_all(us), tensor_all(vs))
}

fn strip_prime(p: &Prime) -> (AlphaFormula, Term, Term) {
    match p {
        Prime::Letter(_) => {
            let a = AlphaFormula::prime(p.clone());
            (a.clone(), Term::Id(a.clone()), Term::Id(a))
        }
        Prime::Imp(a1, a2) => {
            let (a2p, f2, f2inv) = strip(a2);
            if a1.is_unit() {
                // I -o A2 is inverted by eps[I, A2] directly.
                let src = AlphaFormula::imp(a1.clone(), a2.clone());
                let (eps, eta) = eta_eps_i_inverse(a2);
                let u = seq(&src, vec![eps, f2]);
                let v = seq(&a2p, vec![f2inv, eta]);
                return (a2p, u, v);
            }
            if a1.is_constant() {
                let (f1, f1inv) = iso_const(a1).unwrap();
                let i = AlphaFormula::unit();
                let (fwd, back) = imp_iso(a1, a2, &i, (f1, f1inv), (f2, f2inv));
                let (eps, eta) = eta_eps_i_inverse(&a2p);
                let src = AlphaFormula::imp(a1.clone(), a2.clone());
                let u = seq(&src, vec![fwd, eps]);
                let v = seq(&a2p, vec![eta, back]);
                (a2p, u, v)
            } else {
                let (a1p, f1, f1inv) = strip(a1);
                let (fwd, back) = imp_iso(a1, a2, &a1p, (f1, f1inv), (f2, f2inv));
                (AlphaFormula::imp(a1p, a2p), fwd, back)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_alpha;
    use crate::terms::{oracle_equal, TypedTerm};

    fn al(s: &str) -> AlphaFormula {
        parse_alpha(s).unwrap()
    }

    fn inverse_pair(u: &Term, v: &Term, budget: usize) {
        let tu = TypedTerm::new(u.clone()).unwrap();
        let tv = TypedTerm::new(v.clone()).unwrap();
        let vu = TypedTerm::new(comp(v.clone(), u.clone())).unwrap();
        let uv = TypedTerm::new(comp(u.clone(), v.clone())).unwrap();
        let ida = TypedTerm::new(Term::Id(tu.ty.ant.clone())).unwrap();
        let idb = TypedTerm::new(Term::Id(tv.ty.ant.clone())).unwrap();
        assert!(oracle_equal(&vu, &ida, budget).unwrap().is_equal(), "{vu}");
        assert!(oracle_equal(&uv, &idb, budget).unwrap().is_equal(), "{uv}");
    }

    #[test]
    fn unit_is_its_own_iso() {
        let i = AlphaFormula::unit();
        assert_eq!(iso_const(&i).unwrap(), (Term::Id(i.clone()), Term::Id(i)));
    }

    #[test]
    fn implication_case_is_invertible() {
        let (f, g) = iso_const(&al("I -o I")).unwrap();
        assert_eq!(f.to_string(), "eps[I, I] o imp[I](eps[I, I]) o eta[I, I -o I]");
        inverse_pair(&f, &g, 50_000);
    }

    #[test]
    fn tensor_of_constants() {
        let (f, g) = iso_const(&al("(I -o I) * (I -o I)")).unwrap();
        assert_eq!(TypedTerm::new(f.clone()).unwrap().ty.to_string(), "(I -o I) * (I -o I) |- I");
        inverse_pair(&f, &g, 50_000);
    }

    #[test]
    fn non_constant_rejected() {
        assert_eq!(iso_const(&al("p")), Err(IsoError::NotConstant(al("p"))));
        assert!(matches!(strip_const(&al("I -o I")), Err(IsoError::Constant(_))));
        assert!(matches!(strip_const(&al("p -o I")), Err(IsoError::NotProper(_))));
    }

    #[test]
    fn strip_letter_and_unit_implication() {
        let (ap, u, v) = strip_const(&al("p")).unwrap();
        assert_eq!((ap, u, v), (al("p"), Term::Id(al("p")), Term::Id(al("p"))));
        let (ap, u, v) = strip_const(&al("I -o p")).unwrap();
        assert_eq!(ap, al("p"));
        assert_eq!(u, Term::Eps(al("I"), al("p")));
        assert_eq!(v, Term::Eta(al("I"), al("p")));
    }

    #[test]
    fn strip_mixed() {
        let (ap, u, v) = strip_const(&al("p * (I -o I)")).unwrap();
        assert_eq!(ap, al("p"));
        inverse_pair(&u, &v, 50_000);
        let (ap, u, v) = strip_const(&al("(I -o I) -o p")).unwrap();
        assert_eq!(ap, al("p"));
        assert_eq!(TypedTerm::new(u.clone()).unwrap().ty.to_string(), "(I -o I) -o p |- p");
        inverse_pair(&u, &v, 200_000);
    }

    #[test]
    fn eta_eps_unit_inverses() {
        for a in ["I", "p", "p * q"] {
            let (e, h) = eta_eps_i_inverse(&al(a));
            inverse_pair(&e, &h, 10_000);
        }
    }
}
