use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::formula::{AlphaFormula, Letter, Prime};
use super::sequent::SequentIL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Ant,
    Con,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// 1-based prime factor index.
    Factor(usize),
    Dom,
    Cod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Pos => Sign::Neg,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Neg => "-",
            Sign::Pos => "+",
        })
    }
}

/// Address of a letter leaf in a sequent, e.g. `ant.2.d.1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccPath {
    pub side: Side,
    pub steps: Vec<Step>,
}

impl OccPath {
    pub fn new(side: Side, steps: Vec<Step>) -> Self {
        OccPath { side, steps }
    }

    pub fn sign(&self) -> Sign {
        let start = match self.side {
            Side::Ant => Sign::Neg,
            Side::Con => Sign::Pos,
        };
        self.steps
            .iter()
            .filter(|s| **s == Step::Dom)
            .fold(start, |s, _| s.flip())
    }

    /// Resolve the path to the letter it addresses, if any.
    pub fn resolve<'a>(&self, s: &'a SequentIL) -> Option<&'a Letter> {
        let root = match self.side {
            Side::Ant => &s.ant,
            Side::Con => &s.con,
        };
        resolve_in(root, &self.steps)
    }
}

fn resolve_in<'a>(a: &'a AlphaFormula, steps: &[Step]) -> Option<&'a Letter> {
    let (Step::Factor(i), rest) = steps.split_first()? else {
        return None;
    };
    let prime = a.factors().get(i.checked_sub(1)?)?;
    match (prime, rest) {
        (Prime::Letter(l), []) => Some(l),
        (Prime::Imp(d, _), [Step::Dom, tail @ ..]) => resolve_in(d, tail),
        (Prime::Imp(_, c), [Step::Cod, tail @ ..]) => resolve_in(c, tail),
        _ => None,
    }
}

impl fmt::Display for OccPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.side {
            Side::Ant => "ant",
            Side::Con => "con",
        })?;
        for s in &self.steps {
            match s {
                Step::Factor(i) => write!(f, ".{i}")?,
                Step::Dom => f.write_str(".d")?,
                Step::Cod => f.write_str(".c")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed occurrence path {0:?}")]
pub struct BadPath(pub String);

impl FromStr for OccPath {
    type Err = BadPath;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BadPath(s.to_string());
        let mut parts = s.split('.');
        let side = match parts.next() {
            Some("ant") => Side::Ant,
            Some("con") => Side::Con,
            _ => return Err(bad()),
        };
        let steps = parts
            .map(|p| match p {
                "d" => Ok(Step::Dom),
                "c" => Ok(Step::Cod),
                n => n.parse::<usize>().ok().filter(|&i| i >= 1).map(Step::Factor).ok_or_else(bad),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OccPath { side, steps })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub path: OccPath,
    pub letter: Letter,
    pub sign: Sign,
}

/// Every letter leaf of the sequent, antecedent first, left to right and
/// outermost first.
pub fn signed_occurrences(s: &SequentIL) -> Vec<Occurrence> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    walk(&s.ant, Side::Ant, &mut steps, &mut out);
    walk(&s.con, Side::Con, &mut steps, &mut out);
    out
}

fn walk(a: &AlphaFormula, side: Side, steps: &mut Vec<Step>, out: &mut Vec<Occurrence>) {
    for (i, p) in a.factors().iter().enumerate() {
        steps.push(Step::Factor(i + 1));
        match p {
            Prime::Letter(l) => {
                let path = OccPath::new(side, steps.clone());
                out.push(Occurrence { sign: path.sign(), path, letter: l.clone() });
            }
            Prime::Imp(d, c) => {
                steps.push(Step::Dom);
                walk(d, side, steps, out);
                steps.pop();
                steps.push(Step::Cod);
                walk(c, side, steps, out);
                steps.pop();
            }
        }
        steps.pop();
    }
}

/// Leaf paths of an α-formula relative to its own root (side is a placeholder).
pub fn leaf_steps(a: &AlphaFormula) -> Vec<(Vec<Step>, Letter)> {
    let mut out = Vec::new();
    let mut steps = Vec::new();
    walk(a, Side::Ant, &mut steps, &mut out);
    out.into_iter().map(|o| (o.path.steps, o.letter)).collect()
}

/// Every letter occurs exactly twice, once with each sign.
/// Every letter occurs an even number of times in `s`.
pub fn letters_even(s: &SequentIL) -> bool {
    let mut counts = std::collections::BTreeMap::new();
    for o in signed_occurrences(s) {
        *counts.entry(o.letter).or_insert(0usize) += 1;
    }
    counts.values().all(|n| n % 2 == 0)
}

pub fn is_balanced(s: &SequentIL) -> bool {
    let mut counts: BTreeMap<Letter, (usize, usize)> = BTreeMap::new();
    for o in signed_occurrences(s) {
        let e = counts.entry(o.letter).or_default();
        match o.sign {
            Sign::Neg => e.0 += 1,
            Sign::Pos => e.1 += 1,
        }
    }
    counts.values().all(|&c| c == (1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent_il;

    fn listing(s: &str) -> Vec<(String, String, String)> {
        signed_occurrences(&parse_sequent_il(s).unwrap())
            .into_iter()
            .map(|o| (o.path.to_string(), o.letter.to_string(), o.sign.to_string()))
            .collect()
    }

    #[test]
    fn axiom_occurrences() {
        assert_eq!(
            listing("p |- p"),
            vec![
                ("ant.1".into(), "p".into(), "-".into()),
                ("con.1".into(), "p".into(), "+".into())
            ]
        );
    }

    #[test]
    fn modus_ponens_occurrences() {
        let got = listing("p * (p -o q) |- q");
        let want = [("ant.1", "p", "-"), ("ant.2.d.1", "p", "+"), ("ant.2.c.1", "q", "-"), ("con.1", "q", "+")];
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert_eq!((g.0.as_str(), g.1.as_str(), g.2.as_str()), w);
        }
    }

    #[test]
    fn sign_pattern_of_two_sided_example() {
        let signs: Vec<String> = listing("p * (p -o q) |- p -o q * p").into_iter().map(|o| o.2).collect();
        assert_eq!(signs, ["-", "+", "-", "-", "+", "+"]);
    }

    #[test]
    fn balance() {
        assert!(is_balanced(&parse_sequent_il("p * (p -o q) |- q").unwrap()));
        assert!(!is_balanced(&parse_sequent_il("p * (p -o q) |- p -o q * p").unwrap()));
        assert!(is_balanced(&parse_sequent_il("I |- I").unwrap()));
        assert!(!is_balanced(&parse_sequent_il("p |- q").unwrap()));
        assert!(!is_balanced(&parse_sequent_il("p * p |- I").unwrap()));
    }

    #[test]
    fn paths_round_trip_and_resolve() {
        let s = parse_sequent_il("p * (p -o q) |- p -o q * p").unwrap();
        for o in signed_occurrences(&s) {
            let text = o.path.to_string();
            let back: OccPath = text.parse().unwrap();
            assert_eq!(back, o.path);
            assert_eq!(back.resolve(&s), Some(&o.letter));
            let doms = back.steps.iter().filter(|s| **s == Step::Dom).count();
            let expect = if (doms % 2 == 0) == (back.side == Side::Con) { Sign::Pos } else { Sign::Neg };
            assert_eq!(o.sign, expect);
        }
        assert!("ant.0".parse::<OccPath>().is_err());
        assert!("left.1".parse::<OccPath>().is_err());
    }
}
