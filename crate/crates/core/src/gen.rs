//! Seeded random inputs for the fuzz command and the property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::calculus_il::{decode, DerivationIL};
use crate::calculus_s::{derivable_s, DerivationS};
use crate::syntax::{AlphaFormula, Formula, Letter, Prime, SequentIL, SequentS};
use crate::terms::{comp, iso_const, tensor_all, Term, TypedTerm};

/// Shape limits for random terms.
#[derive(Clone, Debug)]
pub struct TermShape {
    pub letters: Vec<Letter>,
    /// Approximate number of constructors.
    pub size: usize,
    pub compositions: bool,
    /// Nesting depth of subscripts of `eta` and of random domains.
    pub formula_depth: usize,
}

impl TermShape {
    pub fn new(letters: &[&str], size: usize) -> TermShape {
        TermShape {
            letters: letters.iter().map(|l| Letter::new(l)).collect(),
            size,
            compositions: true,
            formula_depth: 1,
        }
    }
}

fn random_prime(rng: &mut impl Rng, letters: &[Letter], depth: usize) -> Prime {
    if depth == 0 || (!letters.is_empty() && rng.gen_bool(0.6)) {
        match letters.choose(rng) {
            Some(l) => Prime::Letter(l.clone()),
            None => Prime::imp(AlphaFormula::unit(), AlphaFormula::unit()),
        }
    } else {
        Prime::imp(random_alpha(rng, letters, depth - 1), random_alpha(rng, letters, depth - 1))
    }
}

/// An α-formula with at most two prime factors.
pub fn random_alpha(rng: &mut impl Rng, letters: &[Letter], depth: usize) -> AlphaFormula {
    let n = rng.gen_range(0..=2);
    AlphaFormula::new((0..n).map(|_| random_prime(rng, letters, depth)).collect())
}

/// A random term with domain `dom`.
pub fn random_term_from(rng: &mut impl Rng, dom: &AlphaFormula, shape: &TermShape) -> Term {
    term_from(rng, dom, shape.size.max(1), shape)
}

fn primitive(rng: &mut impl Rng, dom: &AlphaFormula, shape: &TermShape) -> Term {
    let n = dom.len();
    let mut options: Vec<u8> = vec![0, 2];
    if n >= 1 {
        options.push(1);
    }
    let eps_sites: Vec<(usize, usize)> = (0..n)
        .filter_map(|k| match &dom.factors()[k] {
            Prime::Imp(a, _) if a.len() <= k && dom.slice(k - a.len()..k) == *a => Some((k - a.len(), k)),
            _ => None,
        })
        .collect();
    if !eps_sites.is_empty() {
        options.extend([3, 3]);
    }
    if dom.leaf_count() > 5 {
        options.retain(|&o| o != 2);
    }
    match *options.choose(rng).unwrap() {
        0 => Term::Id(dom.clone()),
        1 => {
            let k = rng.gen_range(0..=n);
            Term::Sym(dom.slice(0..k), dom.slice(k..n))
        }
        2 => Term::Eta(random_alpha(rng, &shape.letters, shape.formula_depth), dom.clone()),
        _ => {
            let &(start, k) = eps_sites.choose(rng).unwrap();
            let Prime::Imp(a, b) = &dom.factors()[k] else { unreachable!() };
            tensor_all(vec![
                Term::Id(dom.slice(0..start)),
                Term::Eps(a.clone(), b.clone()),
                Term::Id(dom.slice(k + 1..n)),
            ])
        }
    }
}

fn term_from(rng: &mut impl Rng, dom: &AlphaFormula, fuel: usize, shape: &TermShape) -> Term {
    if fuel <= 1 {
        return primitive(rng, dom, shape);
    }
    let n = dom.len();
    let mut options: Vec<u8> = vec![0];
    if shape.compositions {
        options.extend([1, 1]);
    }
    if n >= 2 {
        options.push(2);
    }
    if let [Prime::Imp(..)] = dom.factors() {
        options.extend([3, 3]);
    }
    match *options.choose(rng).unwrap() {
        0 => primitive(rng, dom, shape),
        1 => {
            let left = rng.gen_range(1..fuel);
            let f = term_from(rng, dom, left, shape);
            let mid = f.type_of().expect("generated terms are typed").con;
            let g = term_from(rng, &mid, fuel - left, shape);
            comp(g, f)
        }
        2 => {
            let k = rng.gen_range(1..n);
            let left = (fuel / 2).max(1);
            let f = term_from(rng, &dom.slice(0..k), left, shape);
            let g = term_from(rng, &dom.slice(k..n), (fuel - 1 - left).max(1), shape);
            tensor_all(vec![f, g])
        }
        _ => {
            let [Prime::Imp(a, b)] = dom.factors() else { unreachable!() };
            Term::Imp(a.clone(), Box::new(term_from(rng, b, fuel - 1, shape)))
        }
    }
}

/// A random typed term on a random domain.
pub fn random_term(rng: &mut impl Rng, shape: &TermShape) -> TypedTerm {
    let dom = random_alpha(rng, &shape.letters, shape.formula_depth);
    TypedTerm::new(random_term_from(rng, &dom, shape)).expect("generated terms are typed")
}

/// A random term of type `I |- I`: a term out of `I` over constant
/// formulas, followed by the invertible map of its codomain to `I`.
pub fn random_unit_term(rng: &mut impl Rng, size: usize) -> TypedTerm {
    let shape = TermShape { letters: vec![], size, compositions: true, formula_depth: 1 };
    let f = random_term_from(rng, &AlphaFormula::unit(), &shape);
    let cod = f.type_of().expect("generated terms are typed").con;
    let term = if cod.is_unit() { f } else { comp(iso_const(&cod).expect("constant").0, f) };
    TypedTerm::new(term).expect("generated terms are typed")
}

/// A random IL derivation with exactly `cuts` cuts, placed anywhere in
/// the tree.
pub fn random_derivation_il(rng: &mut impl Rng, letters: &[Letter], cuts: usize, piece_size: usize) -> DerivationIL {
    let dom = random_alpha(rng, letters, 1);
    derivation_from(rng, letters, &dom, cuts, piece_size)
}

fn piece(rng: &mut impl Rng, letters: &[Letter], dom: &AlphaFormula, size: usize) -> DerivationIL {
    let shape = TermShape { letters: letters.to_vec(), size, compositions: false, formula_depth: 1 };
    decode(&TypedTerm::new(random_term_from(rng, dom, &shape)).expect("generated terms are typed"))
}

fn derivation_from(rng: &mut impl Rng, letters: &[Letter], dom: &AlphaFormula, cuts: usize, size: usize) -> DerivationIL {
    if cuts == 0 {
        return piece(rng, letters, dom, size);
    }
    match rng.gen_range(0..4) {
        0 if dom.len() >= 2 => {
            let k = rng.gen_range(1..dom.len());
            let c1 = rng.gen_range(0..=cuts);
            let l = derivation_from(rng, letters, &dom.slice(0..k), c1, size);
            let r = derivation_from(rng, letters, &dom.slice(k..dom.len()), cuts - c1, size);
            DerivationIL::tensor_both(l, r)
        }
        1 => {
            let a = random_alpha(rng, letters, 0);
            let d = derivation_from(rng, letters, &a.tensor(dom), cuts, size);
            DerivationIL::imp_r(d, a.len())
        }
        _ => {
            // Cut a derivation out of a slice of `dom` into one whose
            // antecedent has the slice replaced by its consequent.
            let n = dom.len();
            let i = rng.gen_range(0..=n);
            let j = rng.gen_range(i..=n);
            let c1 = rng.gen_range(0..cuts);
            let left = derivation_from(rng, letters, &dom.slice(i..j), c1, size);
            let mid = AlphaFormula::concat(&[dom.slice(0..i), left.conclusion.con.clone(), dom.slice(j..n)]);
            let right = derivation_from(rng, letters, &mid, cuts - 1 - c1, size);
            DerivationIL::cut(left, right, i)
        }
    }
}

/// Like `random_derivation_il`, resampling until the height is at most
/// `max_height`.
pub fn random_derivation_il_bounded(
    rng: &mut impl Rng,
    letters: &[Letter],
    cuts: usize,
    piece_size: usize,
    max_height: usize,
) -> DerivationIL {
    loop {
        let d = random_derivation_il(rng, letters, cuts, piece_size);
        if d.height() <= max_height {
            return d;
        }
    }
}

/// Every typed term with at most `max_size` constructors whose primitive
/// subscripts are drawn from `atoms` and all of whose subterm types have
/// at most `max_primes` prime factors on each side. Tensors are flat.
pub fn enumerate_terms(max_size: usize, atoms: &[AlphaFormula], max_primes: usize) -> Vec<TypedTerm> {
    let fits = |s: &SequentIL| s.ant.len() <= max_primes && s.con.len() <= max_primes;
    let mut by_size: Vec<Vec<TypedTerm>> = vec![vec![]; max_size + 1];
    if max_size == 0 {
        return vec![];
    }
    for x in atoms {
        by_size[1].push(TypedTerm::new(Term::Id(x.clone())).unwrap());
        for y in atoms {
            for t in [Term::Sym(x.clone(), y.clone()), Term::Eta(x.clone(), y.clone()), Term::Eps(x.clone(), y.clone())] {
                by_size[1].push(TypedTerm::new(t).unwrap());
            }
        }
    }
    by_size[1].retain(|t| fits(&t.ty));
    for n in 2..=max_size {
        let mut out = Vec::new();
        for a in 1..n - 1 {
            let b = n - 1 - a;
            for f in &by_size[a] {
                for g in by_size[b].iter().filter(|g| g.ty.ant == f.ty.con) {
                    out.push(TypedTerm {
                        term: comp(g.term.clone(), f.term.clone()),
                        ty: SequentIL::new(f.ty.ant.clone(), g.ty.con.clone()),
                    });
                }
            }
        }
        for x in atoms {
            for f in &by_size[n - 1] {
                out.push(TypedTerm::new(Term::Imp(x.clone(), Box::new(f.term.clone()))).unwrap());
            }
        }
        // Flat tensors: a first factor that is not a tensor, then either
        // one more non-tensor factor or the factors of a tensor.
        for a in 1..n - 1 {
            let b = n - 1 - a;
            for f in by_size[a].iter().filter(|f| !matches!(f.term, Term::Tensor(_))) {
                for g in &by_size[b] {
                    let mut parts = vec![f.term.clone()];
                    match &g.term {
                        Term::Tensor(gs) => parts.extend(gs.iter().cloned()),
                        other => parts.push(other.clone()),
                    }
                    let size = 1 + parts.iter().map(Term::size).sum::<usize>();
                    if size == n {
                        out.push(TypedTerm {
                            term: Term::Tensor(parts),
                            ty: SequentIL::new(f.ty.ant.tensor(&g.ty.ant), f.ty.con.tensor(&g.ty.con)),
                        });
                    }
                }
            }
        }
        out.retain(|t| fits(&t.ty));
        by_size[n] = out;
    }
    by_size.into_iter().flatten().collect()
}

/// Every formula over `letters` (and `I`, if `unit`) with at most
/// `max_connectives` occurrences of `*` and `-o`.
pub fn enumerate_formulas(letters: &[&str], unit: bool, max_connectives: usize) -> Vec<Formula> {
    let mut by: Vec<Vec<Formula>> = vec![letters.iter().map(|l| Formula::letter(l)).collect()];
    if unit {
        by[0].push(Formula::Unit);
    }
    for k in 1..=max_connectives {
        let mut out = Vec::new();
        for i in 0..k {
            for a in &by[i] {
                for b in &by[k - 1 - i] {
                    out.push(Formula::tensor(a.clone(), b.clone()));
                    out.push(Formula::imp(a.clone(), b.clone()));
                }
            }
        }
        by.push(out);
    }
    by.into_iter().flatten().collect()
}

/// The hypothesis pattern a splitting instance is built for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Weak,
    Tensor,
    Imp,
}

/// A cut-free derivation of a shuffled antecedent, with the partition it
/// should be split along.
#[derive(Clone, Debug)]
pub struct SplitInstance {
    pub kind: SplitKind,
    pub derivation: DerivationS,
    pub gamma: Vec<Formula>,
    pub delta: Vec<Formula>,
    /// `A` and `B` of the implication, for `SplitKind::Imp`.
    pub imp: Option<(Formula, Formula)>,
}

fn formulas(a: &AlphaFormula) -> Vec<Formula> {
    a.factors().iter().map(Prime::to_formula).collect()
}

/// The type of a small random term, as an S sequent `G |- A`.
fn derivable_pair(rng: &mut impl Rng, letters: &[&str]) -> (Vec<Formula>, Formula) {
    let shape = TermShape::new(letters, rng.gen_range(1..=3));
    let t = random_term(rng, &shape);
    (formulas(&t.ty.ant), t.ty.con.to_formula())
}

fn closed_units(rng: &mut impl Rng) -> Vec<Formula> {
    let i = Formula::Unit;
    let ii = Formula::imp(i.clone(), i.clone());
    let r = Formula::letter("r");
    let pool: Vec<Vec<Formula>> = vec![
        vec![],
        vec![i.clone()],
        vec![ii.clone()],
        vec![r.clone(), Formula::imp(r, i.clone())],
        vec![Formula::tensor(ii.clone(), i), ii.clone(), ii],
    ];
    pool.choose(rng).unwrap().clone()
}

/// A derivable instance of the given kind over disjoint letter sets, or
/// `None` when the sampled sequent is rejected (not proper, or search
/// finds no derivation).
pub fn random_split_instance(rng: &mut impl Rng, kind: SplitKind) -> Option<SplitInstance> {
    let (gamma, a) = derivable_pair(rng, &["p", "q"]);
    let (delta, consequent, imp, mut ant) = match kind {
        SplitKind::Weak => {
            let delta = closed_units(rng);
            (delta, a.clone(), None, vec![])
        }
        SplitKind::Tensor => {
            let (delta, b) = derivable_pair(rng, &["r", "s"]);
            (delta, Formula::tensor(a.clone(), b), None, vec![])
        }
        SplitKind::Imp => {
            let (mut rest, c) = derivable_pair(rng, &["r", "s"]);
            if rest.is_empty() {
                return None;
            }
            let b = rest.remove(0);
            let f = Formula::imp(a.clone(), b.clone());
            (rest, c, Some((a.clone(), b)), vec![f])
        }
    };
    ant.extend(gamma.iter().cloned());
    ant.extend(delta.iter().cloned());
    ant.shuffle(rng);
    let seq = SequentS::new(ant, consequent);
    if kind == SplitKind::Imp && !seq.is_proper() {
        return None;
    }
    if seq.antecedent.iter().chain([&seq.consequent]).map(Formula::symbol_count).sum::<usize>() > 24 {
        return None;
    }
    let derivation = derivable_s(&seq)?;
    Some(SplitInstance { kind, derivation, gamma, delta, imp })
}
