use std::fmt;

use super::formula::{AlphaFormula, Formula};

/// A sequent of the multi-antecedent system: `G1, ..., Gn |- A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequentS {
    pub antecedent: Vec<Formula>,
    pub consequent: Formula,
}

impl SequentS {
    pub fn new(antecedent: Vec<Formula>, consequent: Formula) -> Self {
        SequentS { antecedent, consequent }
    }

    /// The corresponding strict sequent, with the antecedent tensored up.
    pub fn to_il(&self) -> SequentIL {
        let ant = AlphaFormula::concat(self.antecedent.iter().map(|f| f.alpha()).collect::<Vec<_>>().iter());
        SequentIL::new(ant, self.consequent.alpha())
    }

    pub fn is_proper(&self) -> bool {
        self.antecedent.iter().all(Formula::is_proper) && self.consequent.is_proper()
    }
}

impl fmt::Display for SequentS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.antecedent.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        if self.antecedent.is_empty() {
            write!(f, "|- {}", self.consequent)
        } else {
            write!(f, " |- {}", self.consequent)
        }
    }
}

/// A sequent of the strict single-antecedent system: `A |- B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SequentIL {
    pub ant: AlphaFormula,
    pub con: AlphaFormula,
}

impl SequentIL {
    pub fn new(ant: AlphaFormula, con: AlphaFormula) -> Self {
        SequentIL { ant, con }
    }

    pub fn is_proper(&self) -> bool {
        self.ant.is_proper() && self.con.is_proper()
    }
}

impl fmt::Display for SequentIL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.ant, self.con)
    }
}
