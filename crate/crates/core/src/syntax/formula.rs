use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A propositional letter. Cheap to clone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(name: &str) -> Self {
        Letter(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A formula as written, with explicit tensor nesting and unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Letter(Letter),
    Unit,
    Tensor(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn letter(name: &str) -> Self {
        Formula::Letter(Letter::new(name))
    }

    pub fn tensor(a: Formula, b: Formula) -> Self {
        Formula::Tensor(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn is_constant(&self) -> bool {
        match self {
            Formula::Letter(_) => false,
            Formula::Unit => true,
            Formula::Tensor(a, b) | Formula::Imp(a, b) => a.is_constant() && b.is_constant(),
        }
    }

    /// No subformula `B -o C` with `C` constant and `B` not constant.
    pub fn is_proper(&self) -> bool {
        self.improper_witness().is_none()
    }

    /// The first offending `B -o C` subformula, if any.
    pub fn improper_witness(&self) -> Option<&Formula> {
        match self {
            Formula::Letter(_) | Formula::Unit => None,
            Formula::Tensor(a, b) => a.improper_witness().or_else(|| b.improper_witness()),
            Formula::Imp(a, b) => {
                if b.is_constant() && !a.is_constant() {
                    Some(self)
                } else {
                    a.improper_witness().or_else(|| b.improper_witness())
                }
            }
        }
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    pub(crate) fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        match self {
            Formula::Letter(l) => {
                out.insert(l.clone());
            }
            Formula::Unit => {}
            Formula::Tensor(a, b) | Formula::Imp(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    /// Number of `*`, `-o` and `I` symbols.
    pub fn symbol_count(&self) -> usize {
        match self {
            Formula::Letter(_) => 0,
            Formula::Unit => 1,
            Formula::Tensor(a, b) | Formula::Imp(a, b) => 1 + a.symbol_count() + b.symbol_count(),
        }
    }

    /// Flatten tensors and drop unit factors. Implications keep their
    /// unit components.
    pub fn alpha(&self) -> AlphaFormula {
        let mut out = Vec::new();
        self.push_factors(&mut out);
        AlphaFormula::new(out)
    }

    fn push_factors(&self, out: &mut Vec<Prime>) {
        match self {
            Formula::Letter(l) => out.push(Prime::Letter(l.clone())),
            Formula::Unit => {}
            Formula::Tensor(a, b) => {
                a.push_factors(out);
                b.push_factors(out);
            }
            Formula::Imp(a, b) => out.push(Prime::Imp(a.alpha(), b.alpha())),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Letter(l) => write!(f, "{l}"),
            Formula::Unit => f.write_str("I"),
            Formula::Tensor(a, b) => {
                if matches!(**a, Formula::Imp(..)) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                f.write_str(" * ")?;
                if matches!(**b, Formula::Imp(..) | Formula::Tensor(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Formula::Imp(a, b) => {
                if matches!(**a, Formula::Imp(..)) {
                    write!(f, "({a}) -o {b}")
                } else {
                    write!(f, "{a} -o {b}")
                }
            }
        }
    }
}

/// A prime factor of an α-formula: a letter or an implication.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Prime {
    Letter(Letter),
    Imp(AlphaFormula, AlphaFormula),
}

impl Prime {
    pub fn letter(name: &str) -> Self {
        Prime::Letter(Letter::new(name))
    }

    pub fn imp(dom: AlphaFormula, cod: AlphaFormula) -> Self {
        Prime::Imp(dom, cod)
    }

    pub fn is_constant(&self) -> bool {
        match self {
            Prime::Letter(_) => false,
            Prime::Imp(a, b) => a.is_constant() && b.is_constant(),
        }
    }

    fn improper_witness(&self) -> Option<&Prime> {
        match self {
            Prime::Letter(_) => None,
            Prime::Imp(a, b) => {
                if b.is_constant() && !a.is_constant() {
                    Some(self)
                } else {
                    a.improper_witness().or_else(|| b.improper_witness())
                }
            }
        }
    }

    /// Number of `*` and `-o` connectives.
    pub fn connectives(&self) -> usize {
        match self {
            Prime::Letter(_) => 0,
            Prime::Imp(a, b) => 1 + a.connectives() + b.connectives(),
        }
    }

    /// Convert back to a plain formula.
    pub fn to_formula(&self) -> Formula {
        match self {
            Prime::Letter(l) => Formula::Letter(l.clone()),
            Prime::Imp(a, b) => Formula::imp(a.to_formula(), b.to_formula()),
        }
    }

    pub(crate) fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        match self {
            Prime::Letter(l) => {
                out.insert(l.clone());
            }
            Prime::Imp(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    /// Rename every letter through `map`.
    pub fn rename(&self, map: &mut impl FnMut(&Letter) -> Letter) -> Prime {
        match self {
            Prime::Letter(l) => Prime::Letter(map(l)),
            Prime::Imp(a, b) => Prime::Imp(a.rename(map), b.rename(map)),
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::Letter(l) => write!(f, "{l}"),
            Prime::Imp(a, b) => {
                if let [Prime::Imp(..)] = a.factors() {
                    write!(f, "({a}) -o {b}")
                } else {
                    write!(f, "{a} -o {b}")
                }
            }
        }
    }
}

/// A formula with strictly associative tensor and strict unit, stored as
/// the flat list of its prime factors. The empty list is `I`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct AlphaFormula(Arc<[Prime]>);

impl AlphaFormula {
    pub fn new(factors: Vec<Prime>) -> Self {
        AlphaFormula(factors.into())
    }

    pub fn unit() -> Self {
        AlphaFormula::default()
    }

    pub fn letter(name: &str) -> Self {
        AlphaFormula::new(vec![Prime::letter(name)])
    }

    pub fn prime(p: Prime) -> Self {
        AlphaFormula::new(vec![p])
    }

    /// The single-prime formula `dom -o cod`.
    pub fn imp(dom: AlphaFormula, cod: AlphaFormula) -> Self {
        AlphaFormula::prime(Prime::Imp(dom, cod))
    }

    pub fn factors(&self) -> &[Prime] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The strict tensor: list concatenation with `I` as two-sided unit.
    pub fn tensor(&self, other: &AlphaFormula) -> AlphaFormula {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut v = self.0.to_vec();
        v.extend(other.0.iter().cloned());
        AlphaFormula::new(v)
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a AlphaFormula>) -> AlphaFormula {
        let mut v = Vec::new();
        for p in parts {
            v.extend(p.0.iter().cloned());
        }
        AlphaFormula::new(v)
    }

    /// The factors in `range`, as an α-formula.
    pub fn slice(&self, range: std::ops::Range<usize>) -> AlphaFormula {
        AlphaFormula::new(self.0[range].to_vec())
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(Prime::is_constant)
    }

    pub fn is_proper(&self) -> bool {
        self.improper_witness().is_none()
    }

    /// The first offending prime `B -o C` (with `C` constant and `B` not).
    pub fn improper_witness(&self) -> Option<&Prime> {
        self.0.iter().find_map(Prime::improper_witness)
    }

    /// All non-constant prime factors are mutually distinct.
    pub fn is_assorted(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.0
            .iter()
            .filter(|p| !p.is_constant())
            .all(|p| seen.insert(p))
    }

    /// Contains no `I` anywhere, including inside implications.
    pub fn is_unit_free(&self) -> bool {
        !self.is_unit()
            && self.0.iter().all(|p| match p {
                Prime::Letter(_) => true,
                Prime::Imp(a, b) => a.is_unit_free() && b.is_unit_free(),
            })
    }

    /// Number of `*` and `-o` connectives.
    pub fn connectives(&self) -> usize {
        self.0.len().saturating_sub(1) + self.0.iter().map(Prime::connectives).sum::<usize>()
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    pub(crate) fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        for p in self.0.iter() {
            p.collect_letters(out);
        }
    }

    /// Number of letter leaves.
    pub fn leaf_count(&self) -> usize {
        self.0
            .iter()
            .map(|p| match p {
                Prime::Letter(_) => 1,
                Prime::Imp(a, b) => a.leaf_count() + b.leaf_count(),
            })
            .sum()
    }

    pub fn rename(&self, map: &mut impl FnMut(&Letter) -> Letter) -> AlphaFormula {
        AlphaFormula::new(self.0.iter().map(|p| p.rename(map)).collect())
    }

    /// A right-nested plain formula denoting this α-formula.
    pub fn to_formula(&self) -> Formula {
        match self.0.split_last() {
            None => Formula::Unit,
            Some((last, rest)) => rest
                .iter()
                .rev()
                .fold(last.to_formula(), |acc, p| Formula::tensor(p.to_formula(), acc)),
        }
    }
}

impl fmt::Debug for AlphaFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for AlphaFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            [] => f.write_str("I"),
            [p] => write!(f, "{p}"),
            ps => {
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    match p {
                        Prime::Imp(..) => write!(f, "({p})")?,
                        Prime::Letter(_) => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl FromIterator<Prime> for AlphaFormula {
    fn from_iter<T: IntoIterator<Item = Prime>>(iter: T) -> Self {
        AlphaFormula::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Prime {
        Prime::letter("p")
    }

    #[test]
    fn unit_absorption() {
        let f = Formula::tensor(Formula::tensor(Formula::letter("p"), Formula::Unit), Formula::letter("q"));
        assert_eq!(f.alpha(), AlphaFormula::new(vec![p(), Prime::letter("q")]));
        assert!(Formula::tensor(Formula::Unit, Formula::Unit).alpha().is_unit());
    }

    #[test]
    fn imp_unit_is_kept() {
        let f = Formula::tensor(
            Formula::letter("p"),
            Formula::tensor(Formula::letter("q"), Formula::imp(Formula::letter("r"), Formula::Unit)),
        );
        let a = f.alpha();
        assert_eq!(a.len(), 3);
        assert_eq!(a.factors()[2], Prime::imp(AlphaFormula::letter("r"), AlphaFormula::unit()));
    }

    #[test]
    fn tensor_alpha_units() {
        let pa = AlphaFormula::letter("p");
        assert_eq!(pa.tensor(&AlphaFormula::unit()), pa);
        assert_eq!(AlphaFormula::unit().tensor(&AlphaFormula::unit()), AlphaFormula::unit());
        let qr = AlphaFormula::new(vec![Prime::letter("q"), Prime::letter("r")]);
        assert_eq!(pa.tensor(&qr).len(), 3);
    }

    #[test]
    fn predicates() {
        let ii = Prime::imp(AlphaFormula::unit(), AlphaFormula::unit());
        assert!(AlphaFormula::prime(ii.clone()).is_constant());
        assert!(!AlphaFormula::letter("p").is_constant());
        let pp = AlphaFormula::imp(AlphaFormula::letter("p"), AlphaFormula::letter("p"));
        assert!(!pp.is_constant());

        assert!(!AlphaFormula::imp(AlphaFormula::letter("p"), AlphaFormula::unit()).is_proper());
        assert!(AlphaFormula::imp(AlphaFormula::unit(), AlphaFormula::letter("p")).is_proper());
        assert!(AlphaFormula::imp(AlphaFormula::letter("p"), AlphaFormula::letter("q")).is_proper());

        assert!(AlphaFormula::new(vec![p(), Prime::letter("q")]).is_assorted());
        assert!(!AlphaFormula::new(vec![p(), p()]).is_assorted());
        assert!(AlphaFormula::new(vec![ii.clone(), ii]).is_assorted());
    }
}
