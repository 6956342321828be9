mod perm;

pub use perm::{perm_normal_form, Block, Perm, PermNormalForm};

use thiserror::Error;

use crate::syntax::{AlphaFormula, Prime, SequentIL};
use crate::terms::{comp, comp_chain, iso_const, tensor_all, Term, TypedTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CentralError {
    #[error("`{0}` is not central: it uses eta, eps or imp")]
    NotCentral(String),
    #[error("type `{0}` is not assorted")]
    NotAssorted(SequentIL),
    #[error("type `{0}` is neither free of constant factors nor I |- I")]
    NotReduced(SequentIL),
}

fn require_central(t: &TypedTerm) -> Result<(), CentralError> {
    if t.term.is_central() {
        Ok(())
    } else {
        Err(CentralError::NotCentral(t.term.to_string()))
    }
}

/// One step of a developed central term: the adjacent swap `s_j` of the
/// prime factors `j` and `j + 1` (1-indexed) of `source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub source: AlphaFormula,
    pub j: usize,
}

impl Layer {
    pub fn target(&self) -> AlphaFormula {
        let mut fs = self.source.factors().to_vec();
        fs.swap(self.j - 1, self.j);
        AlphaFormula::new(fs)
    }

    /// `1 * sym[C, D] * 1` with `C`, `D` prime.
    pub fn term(&self) -> Term {
        let s = &self.source;
        let j = self.j;
        tensor_all(vec![
            Term::Id(s.slice(0..j - 1)),
            Term::Sym(s.slice(j - 1..j), s.slice(j..j + 1)),
            Term::Id(s.slice(j + 1..s.len())),
        ])
    }
}

/// Appends the 0-based swap positions of `t` acting at `offset`; returns
/// the number of prime factors `t` acts on.
fn swaps(t: &Term, offset: usize, out: &mut Vec<usize>) -> usize {
    match t {
        Term::Id(a) => a.len(),
        Term::Sym(a, b) => {
            // Move each factor of `b` in turn across all of `a`.
            for k in 0..b.len() {
                for pos in (k..k + a.len()).rev() {
                    out.push(offset + pos);
                }
            }
            a.len() + b.len()
        }
        Term::Comp(g, f) => {
            let n = swaps(f, offset, out);
            swaps(g, offset, out);
            n
        }
        Term::Tensor(fs) => fs.iter().fold(0, |at, f| at + swaps(f, offset + at, out)),
        Term::Eta(..) | Term::Eps(..) | Term::Imp(..) => unreachable!("checked central"),
    }
}

/// A central term as a sequence of single adjacent swaps, first applied
/// first.
pub fn develop(c: &TypedTerm) -> Result<Vec<Layer>, CentralError> {
    require_central(c)?;
    let mut pos = Vec::new();
    swaps(&c.term, 0, &mut pos);
    let mut source = c.ty.ant.clone();
    Ok(pos
        .into_iter()
        .map(|p| {
            let l = Layer { source: source.clone(), j: p + 1 };
            source = l.target();
            l
        })
        .collect())
}

/// The composite of developed layers.
pub fn developed_term(source: &AlphaFormula, layers: &[Layer]) -> TypedTerm {
    let term = comp_chain(source, layers.iter().map(Layer::term).collect());
    let con = layers.last().map_or_else(|| source.clone(), Layer::target);
    TypedTerm { term, ty: SequentIL::new(source.clone(), con) }
}

/// Sends constant prime factors to `I` and keeps the rest; with its inverse.
fn unit_out(a: &AlphaFormula) -> (Term, Term) {
    if a.factors().iter().all(|p| !p.is_constant()) {
        return (Term::Id(a.clone()), Term::Id(a.clone()));
    }
    let (fs, gs) = a
        .factors()
        .iter()
        .map(|p| {
            let pa = AlphaFormula::prime(p.clone());
            if p.is_constant() {
                iso_const(&pa).expect("constant prime")
            } else {
                (Term::Id(pa.clone()), Term::Id(pa))
            }
        })
        .unzip();
    (tensor_all(fs), tensor_all(gs))
}

fn drop_constant(a: &AlphaFormula) -> AlphaFormula {
    AlphaFormula::new(a.factors().iter().filter(|p| !p.is_constant()).cloned().collect())
}

/// `c = v^-1 o c' o u` with `c'` reduced.
#[derive(Clone, Debug)]
pub struct Balance {
    pub u: TypedTerm,
    pub reduced: TypedTerm,
    pub v: TypedTerm,
    pub v_inverse: TypedTerm,
}

impl Balance {
    pub fn composite(&self) -> TypedTerm {
        let term = comp(self.v_inverse.term.clone(), comp(self.reduced.term.clone(), self.u.term.clone()));
        TypedTerm { term, ty: SequentIL::new(self.u.ty.ant.clone(), self.v_inverse.ty.con.clone()) }
    }
}

pub fn balance_decompose(c: &TypedTerm) -> Result<Balance, CentralError> {
    let layers = develop(c)?;
    let (a, b) = (&c.ty.ant, &c.ty.con);
    let (a2, b2) = (drop_constant(a), drop_constant(b));
    let (u, _) = unit_out(a);
    let (v, v_inv) = unit_out(b);

    // Swaps involving a constant factor become swaps with I after u.
    let mut arr: Vec<Prime> = a.factors().to_vec();
    let mut source = a2.clone();
    let mut reduced = Vec::new();
    for l in &layers {
        let j = l.j - 1;
        if !arr[j].is_constant() && !arr[j + 1].is_constant() {
            let at = arr[..j].iter().filter(|p| !p.is_constant()).count();
            let r = Layer { source: source.clone(), j: at + 1 };
            source = r.target();
            reduced.push(r);
        }
        arr.swap(j, j + 1);
    }
    let reduced = developed_term(&a2, &reduced);
    debug_assert_eq!(reduced.ty.con, b2);
    Ok(Balance {
        u: TypedTerm { term: u, ty: SequentIL::new(a.clone(), a2) },
        reduced,
        v: TypedTerm { term: v, ty: SequentIL::new(b.clone(), b2.clone()) },
        v_inverse: TypedTerm { term: v_inv, ty: SequentIL::new(b2, b.clone()) },
    })
}

fn is_reduced(s: &SequentIL) -> bool {
    let free = |a: &AlphaFormula| a.factors().iter().all(|p| !p.is_constant());
    (s.ant.is_unit() && s.con.is_unit()) || (free(&s.ant) && free(&s.con))
}

/// The permutation forced by matching the prime factors of the two sides,
/// when they are mutually distinct.
pub fn perm_by_matching(s: &SequentIL) -> Option<Perm> {
    if s.ant.len() != s.con.len() {
        return None;
    }
    let images = s
        .ant
        .factors()
        .iter()
        .map(|p| {
            let mut hits = s.con.factors().iter().enumerate().filter(|(_, q)| *q == p);
            let (i, _) = hits.next()?;
            hits.next().is_none().then_some(i + 1)
        })
        .collect::<Option<Vec<_>>>()?;
    Perm::new(images)
}

/// Where each source factor ends up in the target, for an assorted reduced
/// central term.
pub fn perm_of(c: &TypedTerm) -> Result<Perm, CentralError> {
    require_central(c)?;
    if !c.ty.ant.is_assorted() {
        return Err(CentralError::NotAssorted(c.ty.clone()));
    }
    if !is_reduced(&c.ty) {
        return Err(CentralError::NotReduced(c.ty.clone()));
    }
    let m = c.ty.ant.len();
    let mut p = Perm::identity(m);
    for l in develop(c)? {
        p = Perm::adjacent(m, l.j).after(&p);
    }
    debug_assert_eq!(Some(&p), perm_by_matching(&c.ty).as_ref());
    Ok(p)
}

/// Two assorted central terms are equal exactly when their types agree.
pub fn central_equal(f: &TypedTerm, g: &TypedTerm) -> Result<bool, CentralError> {
    for t in [f, g] {
        require_central(t)?;
        if !t.ty.ant.is_assorted() {
            return Err(CentralError::NotAssorted(t.ty.clone()));
        }
    }
    if f.ty != g.ty {
        return Ok(false);
    }
    let (bf, bg) = (balance_decompose(f)?, balance_decompose(g)?);
    debug_assert_eq!(perm_of(&bf.reduced)?, perm_of(&bg.reduced)?);
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::links_of;
    use crate::terms::oracle_equal;

    fn tt(s: &str) -> TypedTerm {
        TypedTerm::parse(s).unwrap()
    }

    fn developed(c: &TypedTerm) -> TypedTerm {
        developed_term(&c.ty.ant, &develop(c).unwrap())
    }

    #[test]
    fn develop_examples() {
        assert!(develop(&tt("1[p * q]")).unwrap().is_empty());
        let c = tt("sym[p * q, r]");
        let layers = develop(&c).unwrap();
        assert_eq!(layers.iter().map(|l| l.j).collect::<Vec<_>>(), vec![2, 1]);
        let d = developed(&c);
        assert_eq!(d.ty, c.ty);
        assert!(oracle_equal(&d, &c, 20_000).unwrap().is_equal());
        assert_eq!(develop(&tt("sym[p, q] * 1[r]")).unwrap().len(), 1);
        assert!(matches!(develop(&tt("eta[p, q]")), Err(CentralError::NotCentral(_))));
    }

    #[test]
    fn develop_preserves_links() {
        for s in ["sym[p * q, r * s]", "(1[r] * sym[p, q]) o sym[p * q, r]", "sym[I -o I, p] * sym[q, I]"] {
            let c = tt(s);
            assert_eq!(links_of(&developed(&c)), links_of(&c), "{s}");
        }
    }

    #[test]
    fn balance_drops_constant_factors() {
        let c = tt("1[p * (I -o I)]");
        let b = balance_decompose(&c).unwrap();
        assert_eq!(b.reduced, tt("1[p]"));
        assert!(oracle_equal(&b.composite(), &c, 50_000).unwrap().is_equal());

        let c = tt("sym[I -o I, I -o I]");
        let b = balance_decompose(&c).unwrap();
        assert_eq!(b.reduced.ty.to_string(), "I |- I");

        let c = tt("sym[p, q]");
        let b = balance_decompose(&c).unwrap();
        assert_eq!(b.reduced, developed(&c));
        assert!(b.u.term.is_id() && b.v.term.is_id());
    }

    #[test]
    fn balance_keeps_swaps_of_letters() {
        let c = tt("sym[p * (I -o I), q]");
        let b = balance_decompose(&c).unwrap();
        assert_eq!(b.reduced.ty.to_string(), "p * q |- q * p");
        assert_eq!(perm_of(&b.reduced).unwrap().to_string(), "[2 1]");
        assert_eq!(links_of(&b.composite()), links_of(&c));
    }

    #[test]
    fn permutations() {
        assert!(perm_of(&tt("1[p * q]")).unwrap().is_identity());
        assert_eq!(perm_of(&tt("sym[p, q]")).unwrap().to_string(), "[2 1]");
        let c = tt("(sym[q, r] * 1[p]) o (1[q] * sym[p, r]) o (sym[p, q] * 1[r])");
        let p = perm_of(&c).unwrap();
        assert_eq!(p.to_string(), "[3 2 1]");
        assert_eq!(Some(p), perm_by_matching(&c.ty));
        assert!(perm_of(&tt("sym[I, p]")).unwrap().is_identity());
        assert!(perm_of(&tt("sym[p, I]")).unwrap().is_identity());
        assert!(perm_of(&tt("1[I]")).unwrap().is_identity());
        assert!(matches!(perm_of(&tt("1[p * p]")), Err(CentralError::NotAssorted(_))));
        assert!(matches!(perm_of(&tt("1[p * (I -o I)]")), Err(CentralError::NotReduced(_))));
    }

    #[test]
    fn yang_baxter() {
        let lhs = tt("(sym[q, r] * 1[p]) o (1[q] * sym[p, r]) o (sym[p, q] * 1[r])");
        let rhs = tt("(1[r] * sym[p, q]) o (sym[p, r] * 1[q]) o (1[p] * sym[q, r])");
        assert_eq!(central_equal(&lhs, &rhs), Ok(true));
        assert!(oracle_equal(&lhs, &rhs, 50_000).unwrap().is_equal());
        assert_eq!(links_of(&lhs), links_of(&rhs));
    }

    #[test]
    fn central_equality() {
        assert_eq!(central_equal(&tt("1[p * q]"), &tt("1[p * q]")), Ok(true));
        assert_eq!(central_equal(&tt("sym[p, q]"), &tt("1[p * q]")), Ok(false));
        assert!(central_equal(&tt("1[p * p]"), &tt("1[p * p]")).is_err());
        let f = tt("sym[p * q, r]");
        let g = tt("(sym[p, r] * 1[q]) o (1[p] * sym[q, r])");
        assert_eq!(central_equal(&f, &g), Ok(true));
        assert!(oracle_equal(&f, &g, 50_000).unwrap().is_equal());
    }
}
