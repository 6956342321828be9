use std::fmt;

use thiserror::Error;

use crate::deriv_text::{parse_tree, write_node, RawNode};
use crate::syntax::{Formula, ParseError, SequentS};

/// Inference figures of S. Positions are 0-based antecedent indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RuleS {
    /// `A |- A`
    Axiom,
    /// `|- I`
    AxiomI,
    /// `G |- A` over `I, G |- A`
    Weakening,
    /// Swap the formulas at `i` and `i + 1` of the premise.
    Interchange(usize),
    /// `G |- A` and `D, A, T |- B` give `D, G, T |- B`; the index is `|D|`.
    Cut(usize),
    /// `G, A, B, D |- C` gives `G, A * B, D |- C`; the index is `|G|`.
    TensorL(usize),
    /// `G |- A` and `D |- B` give `G, D |- A * B`; the index is `|G|`.
    TensorR(usize),
    /// `G |- A` and `B, D |- C` give `G, A -o B, D |- C`; the index is `|G|`.
    ImpL(usize),
    /// `A, G |- B` gives `G |- A -o B`.
    ImpR,
}

impl RuleS {
    pub fn name(&self) -> &'static str {
        match self {
            RuleS::Axiom => "ax",
            RuleS::AxiomI => "axi",
            RuleS::Weakening => "wk",
            RuleS::Interchange(_) => "int",
            RuleS::Cut(_) => "cut",
            RuleS::TensorL(_) => "tl",
            RuleS::TensorR(_) => "tr",
            RuleS::ImpL(_) => "impl",
            RuleS::ImpR => "impr",
        }
    }

    fn arity(&self) -> usize {
        match self {
            RuleS::Axiom | RuleS::AxiomI => 0,
            RuleS::Weakening | RuleS::Interchange(_) | RuleS::TensorL(_) | RuleS::ImpR => 1,
            RuleS::Cut(_) | RuleS::TensorR(_) | RuleS::ImpL(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivationS {
    pub rule: RuleS,
    pub conclusion: SequentS,
    pub premises: Vec<DerivationS>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("ill-formed {rule} node at `{sequent}`: {msg}")]
pub struct RuleError {
    pub rule: &'static str,
    pub sequent: String,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error("at offset {pos}: {msg}")]
    Shape { pos: usize, msg: String },
}

impl DerivationS {
    fn node(rule: RuleS, conclusion: SequentS, premises: Vec<DerivationS>) -> Self {
        DerivationS { rule, conclusion, premises }
    }

    pub fn axiom(a: Formula) -> Self {
        Self::node(RuleS::Axiom, SequentS::new(vec![a.clone()], a), vec![])
    }

    pub fn axiom_i() -> Self {
        Self::node(RuleS::AxiomI, SequentS::new(vec![], Formula::Unit), vec![])
    }

    pub fn weaken(d: DerivationS) -> Self {
        let mut ant = vec![Formula::Unit];
        ant.extend(d.conclusion.antecedent.iter().cloned());
        let con = d.conclusion.consequent.clone();
        Self::node(RuleS::Weakening, SequentS::new(ant, con), vec![d])
    }

    /// Panics if `i + 1` is out of range.
    pub fn interchange(d: DerivationS, i: usize) -> Self {
        let mut s = d.conclusion.clone();
        s.antecedent.swap(i, i + 1);
        Self::node(RuleS::Interchange(i), s, vec![d])
    }

    /// Panics if the right premise has no formula at `i`.
    pub fn cut(left: DerivationS, right: DerivationS, i: usize) -> Self {
        let r = &right.conclusion.antecedent;
        let mut ant = r[..i].to_vec();
        ant.extend(left.conclusion.antecedent.iter().cloned());
        ant.extend(r[i + 1..].iter().cloned());
        let con = right.conclusion.consequent.clone();
        Self::node(RuleS::Cut(i), SequentS::new(ant, con), vec![left, right])
    }

    /// Panics if `i + 1` is out of range.
    pub fn tensor_l(d: DerivationS, i: usize) -> Self {
        let p = &d.conclusion.antecedent;
        let mut ant = p[..i].to_vec();
        ant.push(Formula::tensor(p[i].clone(), p[i + 1].clone()));
        ant.extend(p[i + 2..].iter().cloned());
        let con = d.conclusion.consequent.clone();
        Self::node(RuleS::TensorL(i), SequentS::new(ant, con), vec![d])
    }

    pub fn tensor_r(left: DerivationS, right: DerivationS) -> Self {
        let k = left.conclusion.antecedent.len();
        let mut ant = left.conclusion.antecedent.clone();
        ant.extend(right.conclusion.antecedent.iter().cloned());
        let con = Formula::tensor(left.conclusion.consequent.clone(), right.conclusion.consequent.clone());
        Self::node(RuleS::TensorR(k), SequentS::new(ant, con), vec![left, right])
    }

    /// Panics if the right premise has an empty antecedent.
    pub fn imp_l(left: DerivationS, right: DerivationS) -> Self {
        let k = left.conclusion.antecedent.len();
        let r = &right.conclusion.antecedent;
        let mut ant = left.conclusion.antecedent.clone();
        ant.push(Formula::imp(left.conclusion.consequent.clone(), r[0].clone()));
        ant.extend(r[1..].iter().cloned());
        let con = right.conclusion.consequent.clone();
        Self::node(RuleS::ImpL(k), SequentS::new(ant, con), vec![left, right])
    }

    /// Panics if the premise has an empty antecedent.
    pub fn imp_r(d: DerivationS) -> Self {
        let p = &d.conclusion.antecedent;
        let ant = p[1..].to_vec();
        let con = Formula::imp(p[0].clone(), d.conclusion.consequent.clone());
        Self::node(RuleS::ImpR, SequentS::new(ant, con), vec![d])
    }

    pub fn is_cut_free(&self) -> bool {
        !matches!(self.rule, RuleS::Cut(_)) && self.premises.iter().all(DerivationS::is_cut_free)
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(DerivationS::size).sum::<usize>()
    }

    /// Reorder the antecedent to `target` by appending interchanges.
    /// Returns `None` if `target` is not a permutation of the antecedent.
    pub fn permute(self, target: &[Formula]) -> Option<DerivationS> {
        let mut cur = self.conclusion.antecedent.clone();
        if cur.len() != target.len() {
            return None;
        }
        let mut d = self;
        for (j, want) in target.iter().enumerate() {
            let k = (j..cur.len()).find(|&k| cur[k] == *want)?;
            for m in (j..k).rev() {
                cur.swap(m, m + 1);
                d = DerivationS::interchange(d, m);
            }
        }
        Some(d)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    fn write(&self, out: &mut String, depth: usize) {
        let head = match &self.rule {
            RuleS::Interchange(i) | RuleS::Cut(i) | RuleS::TensorL(i) | RuleS::TensorR(i) | RuleS::ImpL(i) => {
                format!("{} {} [{}]", self.rule.name(), i, self.conclusion)
            }
            _ => format!("{} [{}]", self.rule.name(), self.conclusion),
        };
        write_node(out, depth, &head, &self.premises, &|o, d, c: &DerivationS| c.write(o, d));
    }

    /// Read the text format; every node is checked against its stated
    /// conclusion.
    pub fn from_text(text: &str) -> Result<DerivationS, ReadError> {
        let raw = parse_tree(text, &|p| p.sequent_s())?;
        let d = build(raw)?;
        check_derivation_s(&d)?;
        Ok(d)
    }
}

fn build(raw: RawNode<SequentS>) -> Result<DerivationS, ReadError> {
    let shape = |msg: String| ReadError::Shape { pos: raw.pos, msg };
    let one = |params: &[usize]| -> Result<usize, ReadError> {
        match params {
            [i] => Ok(*i),
            _ => Err(ReadError::Shape { pos: raw.pos, msg: format!("rule {} takes one index", raw.rule) }),
        }
    };
    let rule = match raw.rule.as_str() {
        "ax" => RuleS::Axiom,
        "axi" => RuleS::AxiomI,
        "wk" => RuleS::Weakening,
        "int" => RuleS::Interchange(one(&raw.params)?),
        "cut" => RuleS::Cut(one(&raw.params)?),
        "tl" => RuleS::TensorL(one(&raw.params)?),
        "tr" => RuleS::TensorR(one(&raw.params)?),
        "impl" => RuleS::ImpL(one(&raw.params)?),
        "impr" => RuleS::ImpR,
        other => return Err(shape(format!("unknown rule {other:?}"))),
    };
    let takes_params = matches!(
        rule,
        RuleS::Interchange(_) | RuleS::Cut(_) | RuleS::TensorL(_) | RuleS::TensorR(_) | RuleS::ImpL(_)
    );
    if !takes_params && !raw.params.is_empty() {
        return Err(shape(format!("rule {} takes no index", raw.rule)));
    }
    if raw.children.len() != rule.arity() {
        return Err(shape(format!("rule {} needs {} premises", raw.rule, rule.arity())));
    }
    let premises = raw.children.into_iter().map(build).collect::<Result<Vec<_>, _>>()?;
    Ok(DerivationS { rule, conclusion: raw.sequent, premises })
}

impl fmt::Display for DerivationS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Check every inference and return the root sequent.
pub fn check_derivation_s(d: &DerivationS) -> Result<SequentS, RuleError> {
    for p in &d.premises {
        check_derivation_s(p)?;
    }
    let err = |msg: &str| RuleError {
        rule: d.rule.name(),
        sequent: d.conclusion.to_string(),
        msg: msg.to_string(),
    };
    if d.premises.len() != d.rule.arity() {
        return Err(err("wrong number of premises"));
    }
    let prem = |k: usize| &d.premises[k].conclusion;
    let expected = match &d.rule {
        RuleS::Axiom => {
            let c = &d.conclusion;
            if c.antecedent.len() != 1 || c.antecedent[0] != c.consequent {
                return Err(err("axiom must have the form A |- A"));
            }
            c.clone()
        }
        RuleS::AxiomI => SequentS::new(vec![], Formula::Unit),
        RuleS::Weakening => {
            let mut ant = vec![Formula::Unit];
            ant.extend(prem(0).antecedent.iter().cloned());
            SequentS::new(ant, prem(0).consequent.clone())
        }
        RuleS::Interchange(i) => {
            let mut s = prem(0).clone();
            if i + 1 >= s.antecedent.len() {
                return Err(err("interchange position out of range"));
            }
            s.antecedent.swap(*i, i + 1);
            s
        }
        RuleS::Cut(i) => {
            let (l, r) = (prem(0), prem(1));
            if *i >= r.antecedent.len() || r.antecedent[*i] != l.consequent {
                return Err(err("cut formula not found in the right premise"));
            }
            let mut ant = r.antecedent[..*i].to_vec();
            ant.extend(l.antecedent.iter().cloned());
            ant.extend(r.antecedent[i + 1..].iter().cloned());
            SequentS::new(ant, r.consequent.clone())
        }
        RuleS::TensorL(i) => {
            let p = prem(0);
            if i + 1 >= p.antecedent.len() {
                return Err(err("tensor position out of range"));
            }
            let mut ant = p.antecedent[..*i].to_vec();
            ant.push(Formula::tensor(p.antecedent[*i].clone(), p.antecedent[i + 1].clone()));
            ant.extend(p.antecedent[i + 2..].iter().cloned());
            SequentS::new(ant, p.consequent.clone())
        }
        RuleS::TensorR(k) => {
            let (l, r) = (prem(0), prem(1));
            if *k != l.antecedent.len() {
                return Err(err("split index does not match the left premise"));
            }
            let mut ant = l.antecedent.clone();
            ant.extend(r.antecedent.iter().cloned());
            SequentS::new(ant, Formula::tensor(l.consequent.clone(), r.consequent.clone()))
        }
        RuleS::ImpL(k) => {
            let (l, r) = (prem(0), prem(1));
            if *k != l.antecedent.len() {
                return Err(err("split index does not match the left premise"));
            }
            if r.antecedent.is_empty() {
                return Err(err("right premise has an empty antecedent"));
            }
            let mut ant = l.antecedent.clone();
            ant.push(Formula::imp(l.consequent.clone(), r.antecedent[0].clone()));
            ant.extend(r.antecedent[1..].iter().cloned());
            SequentS::new(ant, r.consequent.clone())
        }
        RuleS::ImpR => {
            let p = prem(0);
            if p.antecedent.is_empty() {
                return Err(err("premise has an empty antecedent"));
            }
            SequentS::new(p.antecedent[1..].to_vec(), Formula::imp(p.antecedent[0].clone(), p.consequent.clone()))
        }
    };
    if expected != d.conclusion {
        return Err(err(&format!("conclusion should be `{expected}`")));
    }
    Ok(d.conclusion.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_sequent_s};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn axioms_and_weakening() {
        assert_eq!(check_derivation_s(&DerivationS::axiom(f("p"))).unwrap(), parse_sequent_s("p |- p").unwrap());
        let w = DerivationS::weaken(DerivationS::axiom_i());
        assert_eq!(check_derivation_s(&w).unwrap(), parse_sequent_s("I |- I").unwrap());
    }

    #[test]
    fn non_proper_counterexample_derivation_checks() {
        let d = DerivationS::imp_l(DerivationS::axiom(f("p -o I")), DerivationS::axiom(f("I")));
        let d = DerivationS::interchange(d, 0);
        assert_eq!(
            check_derivation_s(&d).unwrap(),
            parse_sequent_s("(p -o I) -o I, p -o I |- I").unwrap()
        );
    }

    #[test]
    fn rejects_wrong_conclusion() {
        let mut d = DerivationS::tensor_r(DerivationS::axiom(f("p")), DerivationS::axiom(f("q")));
        d.conclusion.consequent = f("q * p");
        let e = check_derivation_s(&d).unwrap_err();
        assert_eq!(e.rule, "tr");
    }

    #[test]
    fn text_round_trip() {
        let d = DerivationS::imp_l(DerivationS::axiom(f("p -o I")), DerivationS::axiom(f("I")));
        let d = DerivationS::cut(DerivationS::axiom(f("p -o I")), DerivationS::interchange(d, 0), 1);
        let text = d.to_text();
        let back = DerivationS::from_text(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_text(), text);
        assert!(DerivationS::from_text("(ax [p |- q])").is_err());
        assert!(DerivationS::from_text("(wk [I |- I])").is_err());
    }

    #[test]
    fn permute_reaches_target() {
        let d = DerivationS::tensor_r(
            DerivationS::tensor_r(DerivationS::axiom(f("p")), DerivationS::axiom(f("q"))),
            DerivationS::axiom(f("r")),
        );
        let target = vec![f("r"), f("p"), f("q")];
        let d = d.permute(&target).unwrap();
        assert_eq!(check_derivation_s(&d).unwrap().antecedent, target);
    }
}
