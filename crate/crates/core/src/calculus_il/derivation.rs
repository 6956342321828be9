use std::fmt;

use crate::calculus_s::{derivable_s, DerivationS, ReadError, RuleError, RuleS};
use crate::deriv_text::{parse_tree, write_node, RawNode};
use crate::syntax::{AlphaFormula, Prime, SequentIL, SequentS};
use crate::terms::{comp, tensor_all, Term, TypedTerm};

/// Inference figures of IL. Block sizes count prime factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleIL {
    /// `A |- A`
    Axiom,
    /// `G * A * B * E |- D` over `G * B * A * E |- D`, with `|G| = g`,
    /// `|A| = a`, `|B| = b` in the premise.
    Interchange { g: usize, a: usize, b: usize },
    /// `C |- A` and `G * A * E |- D` over `G * C * E |- D`, with `|G| = g`.
    Cut { g: usize },
    /// `C |- A` and `B * G |- D` over `C * (A -o B) * G |- D`.
    ImpL,
    /// `A * G |- C` over `G |- A -o C`.
    ImpR,
    /// `A |- C` and `B |- E` over `A * B |- C * E`.
    TensorBoth,
}

impl RuleIL {
    pub fn name(self) -> &'static str {
        match self {
            RuleIL::Axiom => "ax",
            RuleIL::Interchange { .. } => "int",
            RuleIL::Cut { .. } => "cut",
            RuleIL::ImpL => "impl",
            RuleIL::ImpR => "impr",
            RuleIL::TensorBoth => "tt",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            RuleIL::Axiom => 0,
            RuleIL::Interchange { .. } | RuleIL::ImpR => 1,
            RuleIL::Cut { .. } | RuleIL::ImpL | RuleIL::TensorBoth => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivationIL {
    pub rule: RuleIL,
    pub conclusion: SequentIL,
    pub premises: Vec<DerivationIL>,
}

fn seq(ant: AlphaFormula, con: AlphaFormula) -> SequentIL {
    SequentIL::new(ant, con)
}

impl DerivationIL {
    pub fn axiom(a: AlphaFormula) -> Self {
        DerivationIL { rule: RuleIL::Axiom, conclusion: seq(a.clone(), a), premises: vec![] }
    }

    /// Swap the blocks `[g, g + a)` and `[g + a, g + a + b)` of the premise.
    pub fn interchange(d: DerivationIL, g: usize, a: usize, b: usize) -> Self {
        let p = &d.conclusion.ant;
        let n = p.len();
        let ant = AlphaFormula::concat(&[
            p.slice(0..g),
            p.slice(g + a..g + a + b),
            p.slice(g..g + a),
            p.slice(g + a + b..n),
        ]);
        let conclusion = seq(ant, d.conclusion.con.clone());
        DerivationIL { rule: RuleIL::Interchange { g, a, b }, conclusion, premises: vec![d] }
    }

    /// Interchange, omitted when one of the blocks is empty.
    pub fn interchange_visible(d: DerivationIL, g: usize, a: usize, b: usize) -> Self {
        if a == 0 || b == 0 {
            d
        } else {
            DerivationIL::interchange(d, g, a, b)
        }
    }

    pub fn cut(left: DerivationIL, right: DerivationIL, g: usize) -> Self {
        let a = left.conclusion.con.len();
        let r = &right.conclusion.ant;
        let ant = AlphaFormula::concat(&[r.slice(0..g), left.conclusion.ant.clone(), r.slice(g + a..r.len())]);
        let conclusion = seq(ant, right.conclusion.con.clone());
        DerivationIL { rule: RuleIL::Cut { g }, conclusion, premises: vec![left, right] }
    }

    /// `b` is the number of prime factors of `B` in the right premise.
    pub fn imp_l(left: DerivationIL, right: DerivationIL, b: usize) -> Self {
        let r = &right.conclusion.ant;
        let imp = AlphaFormula::imp(left.conclusion.con.clone(), r.slice(0..b));
        let ant = AlphaFormula::concat(&[left.conclusion.ant.clone(), imp, r.slice(b..r.len())]);
        let conclusion = seq(ant, right.conclusion.con.clone());
        DerivationIL { rule: RuleIL::ImpL, conclusion, premises: vec![left, right] }
    }

    /// `a` is the number of prime factors of `A` in the premise.
    pub fn imp_r(d: DerivationIL, a: usize) -> Self {
        let p = &d.conclusion.ant;
        let con = AlphaFormula::imp(p.slice(0..a), d.conclusion.con.clone());
        let conclusion = seq(p.slice(a..p.len()), con);
        DerivationIL { rule: RuleIL::ImpR, conclusion, premises: vec![d] }
    }

    pub fn tensor_both(left: DerivationIL, right: DerivationIL) -> Self {
        let conclusion = seq(
            left.conclusion.ant.tensor(&right.conclusion.ant),
            left.conclusion.con.tensor(&right.conclusion.con),
        );
        DerivationIL { rule: RuleIL::TensorBoth, conclusion, premises: vec![left, right] }
    }

    pub fn is_cut_free(&self) -> bool {
        !matches!(self.rule, RuleIL::Cut { .. }) && self.premises.iter().all(DerivationIL::is_cut_free)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(DerivationIL::size).sum::<usize>()
    }

    /// Number of rule applications on the longest branch.
    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(DerivationIL::height).max().unwrap_or(0)
    }

    pub fn cut_count(&self) -> usize {
        usize::from(matches!(self.rule, RuleIL::Cut { .. }))
            + self.premises.iter().map(DerivationIL::cut_count).sum::<usize>()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    fn write(&self, out: &mut String, depth: usize) {
        let head = match self.rule {
            RuleIL::Interchange { g, a, b } => format!("int {g} {a} {b} [{}]", self.conclusion),
            RuleIL::Cut { g } => format!("cut {g} [{}]", self.conclusion),
            r => format!("{} [{}]", r.name(), self.conclusion),
        };
        write_node(out, depth, &head, &self.premises, &|o, d, c: &DerivationIL| c.write(o, d));
    }

    /// Read the text format; every node is checked against its stated
    /// conclusion.
    pub fn from_text(text: &str) -> Result<DerivationIL, ReadError> {
        let raw = parse_tree(text, &|p| p.sequent_il())?;
        let d = build(raw)?;
        check_derivation_il(&d)?;
        Ok(d)
    }
}

fn build(raw: RawNode<SequentIL>) -> Result<DerivationIL, ReadError> {
    let shape = |msg: String| ReadError::Shape { pos: raw.pos, msg };
    let rule = match (raw.rule.as_str(), raw.params.as_slice()) {
        ("ax", []) => RuleIL::Axiom,
        ("int", [g, a, b]) => RuleIL::Interchange { g: *g, a: *a, b: *b },
        ("cut", [g]) => RuleIL::Cut { g: *g },
        ("impl", []) => RuleIL::ImpL,
        ("impr", []) => RuleIL::ImpR,
        ("tt", []) => RuleIL::TensorBoth,
        ("ax" | "int" | "cut" | "impl" | "impr" | "tt", _) => {
            return Err(shape(format!("wrong number of indices for rule {}", raw.rule)))
        }
        (other, _) => return Err(shape(format!("unknown rule {other:?}"))),
    };
    if raw.children.len() != rule.arity() {
        return Err(shape(format!("rule {} needs {} premises", raw.rule, rule.arity())));
    }
    let premises = raw.children.into_iter().map(build).collect::<Result<Vec<_>, _>>()?;
    Ok(DerivationIL { rule, conclusion: raw.sequent, premises })
}

impl fmt::Display for DerivationIL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Check every inference and return the root sequent.
pub fn check_derivation_il(d: &DerivationIL) -> Result<SequentIL, RuleError> {
    for p in &d.premises {
        check_derivation_il(p)?;
    }
    let err = |msg: &str| RuleError { rule: d.rule.name(), sequent: d.conclusion.to_string(), msg: msg.to_string() };
    if d.premises.len() != d.rule.arity() {
        return Err(err("wrong number of premises"));
    }
    let c = &d.conclusion;
    let ps: Vec<&SequentIL> = d.premises.iter().map(|p| &p.conclusion).collect();
    let expected = match d.rule {
        RuleIL::Axiom => {
            if c.ant != c.con {
                return Err(err("antecedent and consequent differ"));
            }
            return Ok(c.clone());
        }
        RuleIL::Interchange { g, a, b } => {
            if g + a + b > ps[0].ant.len() {
                return Err(err("blocks exceed the premise antecedent"));
            }
            DerivationIL::interchange(d.premises[0].clone(), g, a, b).conclusion
        }
        RuleIL::Cut { g } => {
            let a = &ps[0].con;
            let r = &ps[1].ant;
            if g + a.len() > r.len() || r.slice(g..g + a.len()) != *a {
                return Err(err("cut formula not found in the right premise"));
            }
            DerivationIL::cut(d.premises[0].clone(), d.premises[1].clone(), g).conclusion
        }
        RuleIL::ImpL => {
            let k = ps[0].ant.len();
            let Some(Prime::Imp(a, b)) = c.ant.factors().get(k) else {
                return Err(err("no implication after the left premise antecedent"));
            };
            if *a != ps[0].con {
                return Err(err("implication domain differs from the left premise consequent"));
            }
            if ps[1].ant.len() < b.len() || ps[1].ant.slice(0..b.len()) != *b {
                return Err(err("right premise does not start with the implication codomain"));
            }
            DerivationIL::imp_l(d.premises[0].clone(), d.premises[1].clone(), b.len()).conclusion
        }
        RuleIL::ImpR => {
            let [Prime::Imp(a, _)] = c.con.factors() else {
                return Err(err("consequent is not an implication"));
            };
            if ps[0].ant.len() < a.len() || ps[0].ant.slice(0..a.len()) != *a {
                return Err(err("premise does not start with the implication domain"));
            }
            DerivationIL::imp_r(d.premises[0].clone(), a.len()).conclusion
        }
        RuleIL::TensorBoth => DerivationIL::tensor_both(d.premises[0].clone(), d.premises[1].clone()).conclusion,
    };
    if expected != *c {
        return Err(err(&format!("premises give `{expected}`")));
    }
    Ok(c.clone())
}

/// The term coding a checked derivation.
pub fn code(d: &DerivationIL) -> TypedTerm {
    TypedTerm { term: code_term(d), ty: d.conclusion.clone() }
}

fn id(a: AlphaFormula) -> Term {
    Term::Id(a)
}

fn code_term(d: &DerivationIL) -> Term {
    let c = &d.conclusion;
    match d.rule {
        RuleIL::Axiom => id(c.ant.clone()),
        RuleIL::Interchange { g, a, b } => {
            let p = &d.premises[0].conclusion.ant;
            let sym = Term::Sym(p.slice(g + a..g + a + b), p.slice(g..g + a));
            let layer = tensor_all(vec![id(p.slice(0..g)), sym, id(p.slice(g + a + b..p.len()))]);
            comp(code_term(&d.premises[0]), layer)
        }
        RuleIL::Cut { g } => {
            let f = code_term(&d.premises[0]);
            let n = d.premises[0].conclusion.ant.len();
            let layer = tensor_all(vec![id(c.ant.slice(0..g)), f, id(c.ant.slice(g + n..c.ant.len()))]);
            comp(code_term(&d.premises[1]), layer)
        }
        RuleIL::ImpL => {
            let k = d.premises[0].conclusion.ant.len();
            let Prime::Imp(a, b) = &c.ant.factors()[k] else { unreachable!("checked implication") };
            let imp = c.ant.slice(k..k + 1);
            let rest = id(c.ant.slice(k + 1..c.ant.len()));
            let f = code_term(&d.premises[0]);
            let lower = tensor_all(vec![f, id(imp), rest.clone()]);
            let eps = tensor_all(vec![Term::Eps(a.clone(), b.clone()), rest]);
            comp(code_term(&d.premises[1]), comp(eps, lower))
        }
        RuleIL::ImpR => {
            let [Prime::Imp(a, _)] = c.con.factors() else { unreachable!("checked implication") };
            let f = code_term(&d.premises[0]);
            comp(Term::Imp(a.clone(), Box::new(f)), Term::Eta(a.clone(), c.ant.clone()))
        }
        RuleIL::TensorBoth => tensor_all(vec![code_term(&d.premises[0]), code_term(&d.premises[1])]),
    }
}

/// A derivation whose code equals `t`. Compositions become cuts, which
/// are left in place.
pub fn decode(t: &TypedTerm) -> DerivationIL {
    decode_term(&t.term)
}

fn decode_term(t: &Term) -> DerivationIL {
    match t {
        Term::Id(a) => DerivationIL::axiom(a.clone()),
        Term::Sym(a, b) => DerivationIL::interchange(DerivationIL::axiom(b.tensor(a)), 0, b.len(), a.len()),
        Term::Eta(a, b) => DerivationIL::imp_r(DerivationIL::axiom(a.tensor(b)), a.len()),
        Term::Eps(a, b) => DerivationIL::imp_l(DerivationIL::axiom(a.clone()), DerivationIL::axiom(b.clone()), b.len()),
        Term::Comp(g, f) => DerivationIL::cut(decode_term(f), decode_term(g), 0),
        Term::Tensor(fs) => {
            let mut it = fs.iter().rev().map(decode_term);
            let last = it.next().expect("tensor has factors");
            it.fold(last, |acc, d| DerivationIL::tensor_both(d, acc))
        }
        Term::Imp(a, g) => {
            let inner = decode_term(g);
            let b = inner.conclusion.ant.len();
            DerivationIL::imp_r(DerivationIL::imp_l(DerivationIL::axiom(a.clone()), inner, b), a.len())
        }
    }
}

/// Translate an S derivation. Weakening and tensor-left leave the
/// IL sequent unchanged and disappear; so do interchanges of a unit.
pub fn from_s(d: &DerivationS) -> DerivationIL {
    let lens = |fs: &[crate::syntax::Formula]| fs.iter().map(|f| f.alpha().len()).sum::<usize>();
    let ant = &d.conclusion.antecedent;
    match d.rule {
        RuleS::Axiom | RuleS::AxiomI => DerivationIL::axiom(d.conclusion.consequent.alpha()),
        RuleS::Weakening | RuleS::TensorL(_) => from_s(&d.premises[0]),
        RuleS::Interchange(i) => {
            let p = &d.premises[0].conclusion.antecedent;
            DerivationIL::interchange_visible(
                from_s(&d.premises[0]),
                lens(&p[..i]),
                p[i].alpha().len(),
                p[i + 1].alpha().len(),
            )
        }
        RuleS::Cut(i) => DerivationIL::cut(from_s(&d.premises[0]), from_s(&d.premises[1]), lens(&ant[..i])),
        RuleS::TensorR(_) => DerivationIL::tensor_both(from_s(&d.premises[0]), from_s(&d.premises[1])),
        RuleS::ImpL(_) => {
            let b = d.premises[1].conclusion.antecedent[0].alpha().len();
            DerivationIL::imp_l(from_s(&d.premises[0]), from_s(&d.premises[1]), b)
        }
        RuleS::ImpR => {
            let a = d.premises[0].conclusion.antecedent[0].alpha().len();
            DerivationIL::imp_r(from_s(&d.premises[0]), a)
        }
    }
}

/// Cut-free derivation of `s`, if one exists, found through S with one
/// antecedent formula per prime factor.
pub fn derivable_il(s: &SequentIL) -> Option<DerivationIL> {
    let ant = s.ant.factors().iter().map(Prime::to_formula).collect();
    let d = derivable_s(&SequentS::new(ant, s.con.to_formula()))?;
    let il = from_s(&d);
    debug_assert_eq!(il.conclusion, *s);
    Some(il)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_alpha, parse_sequent_il};

    fn al(s: &str) -> AlphaFormula {
        parse_alpha(s).unwrap()
    }

    fn sq(s: &str) -> SequentIL {
        parse_sequent_il(s).unwrap()
    }

    #[test]
    fn axiom_and_tensor() {
        let d = DerivationIL::axiom(al("p * q"));
        assert_eq!(check_derivation_il(&d).unwrap(), sq("p * q |- p * q"));
        let t = DerivationIL::tensor_both(DerivationIL::axiom(al("p")), DerivationIL::axiom(al("q")));
        assert_eq!(check_derivation_il(&t).unwrap(), sq("p * q |- p * q"));
    }

    #[test]
    fn implication_right_with_unit_remainder() {
        let d = DerivationIL::imp_r(DerivationIL::axiom(al("p")), 1);
        assert_eq!(check_derivation_il(&d).unwrap(), sq("I |- p -o p"));
    }

    #[test]
    fn codes_of_rules() {
        assert_eq!(code(&DerivationIL::axiom(al("p"))).term, Term::Id(al("p")));
        let eps = DerivationIL::imp_l(DerivationIL::axiom(al("p")), DerivationIL::axiom(al("q")), 1);
        assert_eq!(code(&eps).term.to_string(), "1[q] o eps[p, q] o (1[p] * 1[p -o q])");
        let eta = DerivationIL::imp_r(DerivationIL::axiom(al("p * q")), 1);
        assert_eq!(code(&eta).term.to_string(), "imp[p](1[p * q]) o eta[p, q]");
    }

    #[test]
    fn decode_types_agree() {
        for s in [
            "1[p]",
            "sym[p, q * r]",
            "eta[p, q]",
            "eps[p -o q, r]",
            "imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]",
            "imp[I](eta[I, p])",
        ] {
            let t = TypedTerm::parse(s).unwrap();
            let d = decode(&t);
            assert_eq!(check_derivation_il(&d).unwrap(), t.ty, "{s}");
            assert_eq!(code(&d).ty, t.ty);
        }
    }

    #[test]
    fn search() {
        assert!(derivable_il(&sq("p * (p -o q) |- q")).is_some());
        assert!(derivable_il(&sq("p |- q")).is_none());
        assert!(derivable_il(&sq("p * (p -o q) |- I")).is_none());
        let d = derivable_il(&sq("p * q |- q * p")).unwrap();
        assert!(d.is_cut_free());
        assert_eq!(check_derivation_il(&d).unwrap(), sq("p * q |- q * p"));
    }

    #[test]
    fn text_round_trip() {
        let t = TypedTerm::parse("imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]").unwrap();
        let d = decode(&t);
        let text = d.to_text();
        assert_eq!(DerivationIL::from_text(&text).unwrap(), d);
        assert!(DerivationIL::from_text("(ax [p |- q])").is_err());
        assert!(DerivationIL::from_text("(int 0 1 [p |- p] (ax [p |- p]))").is_err());
    }

    #[test]
    fn bad_nodes_rejected() {
        let mut d = DerivationIL::imp_r(DerivationIL::axiom(al("p")), 1);
        d.conclusion = sq("I |- q -o p");
        assert!(check_derivation_il(&d).is_err());
    }
}
