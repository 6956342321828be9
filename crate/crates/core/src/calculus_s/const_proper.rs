use std::fmt;

use thiserror::Error;

use super::derivation::{check_derivation_s, DerivationS, RuleError, RuleS};
use crate::syntax::SequentS;

/// Which step of the constancy induction justified a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstCase {
    /// `|- I`
    Base,
    /// `A |- A` with `A` constant.
    Axiom,
    Interchange,
    Weakening,
    TensorL,
    TensorR,
    ImpL,
    ImpR,
}

impl ConstCase {
    /// Case number in the five-case induction; `None` for axioms and
    /// interchange, which it leaves implicit.
    pub fn number(self) -> Option<u8> {
        match self {
            ConstCase::Weakening => Some(1),
            ConstCase::TensorL => Some(2),
            ConstCase::TensorR => Some(3),
            ConstCase::ImpL => Some(4),
            ConstCase::ImpR => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for ConstCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(n) => write!(f, "case {n}"),
            None => write!(f, "{self:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstTrace {
    /// One entry per node, in post-order.
    pub steps: Vec<(ConstCase, SequentS)>,
}

impl ConstTrace {
    pub fn last_case(&self) -> Option<ConstCase> {
        self.steps.last().map(|s| s.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstProperError {
    #[error("antecedent formula `{0}` is not proper")]
    NotProper(String),
    #[error("consequent `{0}` is not constant")]
    NotConstant(String),
    #[error("derivation contains a cut")]
    NotCutFree,
    #[error(transparent)]
    Ill(#[from] RuleError),
    #[error("constancy fails at `{0}`")]
    Violated(String),
}

/// Confirm that a cut-free derivation of `G |- A`, with `G` proper and
/// `A` constant, has a constant antecedent, replaying the induction node
/// by node.
pub fn check_const_proper(d: &DerivationS) -> Result<ConstTrace, ConstProperError> {
    let s = check_derivation_s(d)?;
    if let Some(f) = s.antecedent.iter().find(|f| !f.is_proper()) {
        return Err(ConstProperError::NotProper(f.to_string()));
    }
    if !s.consequent.is_constant() {
        return Err(ConstProperError::NotConstant(s.consequent.to_string()));
    }
    if !d.is_cut_free() {
        return Err(ConstProperError::NotCutFree);
    }
    let mut steps = Vec::new();
    walk(d, &mut steps)?;
    Ok(ConstTrace { steps })
}

/// Precondition: the node's antecedent is proper and consequent constant.
fn walk(d: &DerivationS, trace: &mut Vec<(ConstCase, SequentS)>) -> Result<(), ConstProperError> {
    let case = match d.rule {
        RuleS::AxiomI => ConstCase::Base,
        RuleS::Axiom => ConstCase::Axiom,
        RuleS::Interchange(_) => {
            walk(&d.premises[0], trace)?;
            ConstCase::Interchange
        }
        RuleS::Weakening => {
            walk(&d.premises[0], trace)?;
            ConstCase::Weakening
        }
        RuleS::TensorL(_) => {
            walk(&d.premises[0], trace)?;
            ConstCase::TensorL
        }
        RuleS::TensorR(_) => {
            walk(&d.premises[0], trace)?;
            walk(&d.premises[1], trace)?;
            ConstCase::TensorR
        }
        RuleS::ImpL(_) => {
            // The right premise first: it makes C constant, and propriety of
            // B -o C then makes B constant, which licenses the left premise.
            let right = &d.premises[1];
            walk(right, trace)?;
            if !right.conclusion.antecedent[0].is_constant() {
                return Err(ConstProperError::Violated(right.conclusion.to_string()));
            }
            walk(&d.premises[0], trace)?;
            ConstCase::ImpL
        }
        RuleS::ImpR => {
            walk(&d.premises[0], trace)?;
            ConstCase::ImpR
        }
        RuleS::Cut(_) => return Err(ConstProperError::NotCutFree),
    };
    if !d.conclusion.antecedent.iter().all(|f| f.is_constant()) {
        return Err(ConstProperError::Violated(d.conclusion.to_string()));
    }
    trace.push((case, d.conclusion.clone()));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus_s::derivable_s;
    use crate::syntax::parse_sequent_s;

    #[test]
    fn base_case() {
        let t = check_const_proper(&DerivationS::axiom_i()).unwrap();
        assert_eq!(t.last_case(), Some(ConstCase::Base));
    }

    #[test]
    fn implication_left_case() {
        let d = derivable_s(&parse_sequent_s("I -o I |- I").unwrap()).unwrap();
        let t = check_const_proper(&d).unwrap();
        assert_eq!(t.last_case(), Some(ConstCase::ImpL));
        assert_eq!(t.last_case().unwrap().number(), Some(4));
    }

    #[test]
    fn improper_antecedent_rejected() {
        let d = derivable_s(&parse_sequent_s("p, p -o I |- I").unwrap()).unwrap();
        assert!(matches!(check_const_proper(&d), Err(ConstProperError::NotProper(_))));
    }
}
