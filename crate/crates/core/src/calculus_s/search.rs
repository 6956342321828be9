use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use super::derivation::DerivationS;
use crate::syntax::{Formula, SequentS};

/// Backward cut-free proof search. Antecedents are treated as multisets;
/// the interchanges needed to reach the requested order are appended on
/// the way back up.
pub fn derivable_s(s: &SequentS) -> Option<DerivationS> {
    let mut search = Search::default();
    let mut ant = s.antecedent.clone();
    ant.sort();
    let d = search.prove(&ant, &s.consequent)?;
    d.permute(&s.antecedent)
}

#[derive(Default)]
struct Search {
    memo: HashMap<(Vec<Formula>, Formula), Option<DerivationS>>,
}

impl Search {
    /// `ant` is sorted; the returned derivation concludes exactly `ant |- con`.
    fn prove(&mut self, ant: &[Formula], con: &Formula) -> Option<DerivationS> {
        let key = (ant.to_vec(), con.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = if polarity_balanced(ant, con) { self.prove_uncached(ant, con) } else { None };
        self.memo.insert(key, result.clone());
        result
    }

    fn prove_sorted(&mut self, mut ant: Vec<Formula>, con: &Formula, order: &[Formula]) -> Option<DerivationS> {
        ant.sort();
        let d = self.prove(&ant, con)?;
        d.permute(order)
    }

    fn prove_uncached(&mut self, ant: &[Formula], con: &Formula) -> Option<DerivationS> {
        if ant.len() == 1 && ant[0] == *con {
            return Some(DerivationS::axiom(con.clone()));
        }
        if ant.is_empty() && *con == Formula::Unit {
            return Some(DerivationS::axiom_i());
        }
        // Left tensor is invertible, so the first one found decides the sequent.
        if let Some(i) = ant.iter().position(|f| matches!(f, Formula::Tensor(..))) {
            let Formula::Tensor(a, b) = &ant[i] else { unreachable!() };
            let mut prem = ant[..i].to_vec();
            prem.push((**a).clone());
            prem.push((**b).clone());
            prem.extend(ant[i + 1..].iter().cloned());
            let d = self.prove_sorted(prem.clone(), con, &prem)?;
            return Some(DerivationS::tensor_l(d, i));
        }
        if let Formula::Tensor(a, b) = con {
            for (left, right) in splits(ant) {
                let Some(l) = self.prove(&left, a) else { continue };
                let Some(r) = self.prove(&right, b) else { continue };
                return DerivationS::tensor_r(l, r).permute(ant);
            }
        }
        if let Formula::Imp(a, b) = con {
            let mut prem = vec![(**a).clone()];
            prem.extend(ant.iter().cloned());
            let d = self.prove_sorted(prem.clone(), b, &prem)?;
            return Some(DerivationS::imp_r(d));
        }
        let mut tried = HashSet::new();
        for (i, f) in ant.iter().enumerate() {
            let Formula::Imp(a, b) = f else { continue };
            if !tried.insert(f) {
                continue;
            }
            let mut rest = ant[..i].to_vec();
            rest.extend(ant[i + 1..].iter().cloned());
            for (g, delta) in splits(&rest) {
                let Some(l) = self.prove(&g, a) else { continue };
                let mut rprem = vec![(**b).clone()];
                rprem.extend(delta.iter().cloned());
                let Some(r) = self.prove_sorted(rprem.clone(), con, &rprem) else { continue };
                return DerivationS::imp_l(l, r).permute(ant);
            }
        }
        if let Some(i) = ant.iter().position(|f| *f == Formula::Unit) {
            let mut prem = ant[..i].to_vec();
            prem.extend(ant[i + 1..].iter().cloned());
            let d = self.prove(&prem, con)?;
            return DerivationS::weaken(d).permute(ant);
        }
        None
    }
}

/// All ways to split a sorted multiset into two sorted sub-multisets,
/// without repetitions.
fn splits(ant: &[Formula]) -> Vec<(Vec<Formula>, Vec<Formula>)> {
    let mut groups: Vec<(&Formula, usize)> = Vec::new();
    for f in ant {
        match groups.last_mut() {
            Some((g, n)) if *g == f => *n += 1,
            _ => groups.push((f, 1)),
        }
    }
    let mut out = Vec::new();
    let mut take = vec![0usize; groups.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for ((f, n), &k) in groups.iter().zip(&take) {
            for j in 0..*n {
                if j < k {
                    left.push((*f).clone());
                } else {
                    right.push((*f).clone());
                }
            }
        }
        out.push((left, right));
        let mut idx = 0;
        loop {
            if idx == groups.len() {
                return out;
            }
            if take[idx] < groups[idx].1 {
                take[idx] += 1;
                break;
            }
            take[idx] = 0;
            idx += 1;
        }
    }
}

/// Necessary condition for derivability: every letter has as many
/// positive as negative occurrences.
fn polarity_balanced(ant: &[Formula], con: &Formula) -> bool {
    fn count(f: &Formula, positive: bool, acc: &mut BTreeMap<String, i64>) {
        match f {
            Formula::Letter(l) => *acc.entry(l.as_str().to_string()).or_default() += if positive { 1 } else { -1 },
            Formula::Unit => {}
            Formula::Tensor(a, b) => {
                count(a, positive, acc);
                count(b, positive, acc);
            }
            Formula::Imp(a, b) => {
                count(a, !positive, acc);
                count(b, positive, acc);
            }
        }
    }
    let mut acc = BTreeMap::new();
    for f in ant {
        count(f, false, &mut acc);
    }
    count(con, true, &mut acc);
    acc.values().all(|&v| v == 0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula `{0}` is not constant")]
pub struct NotConstant(pub String);

/// Derivations of `A |- I` and `I |- A` for a constant formula `A`.
pub fn const_iso_s(a: &Formula) -> Result<(DerivationS, DerivationS), NotConstant> {
    if !a.is_constant() {
        return Err(NotConstant(a.to_string()));
    }
    let to_unit = derivable_s(&SequentS::new(vec![a.clone()], Formula::Unit));
    let from_unit = derivable_s(&SequentS::new(vec![Formula::Unit], a.clone()));
    match (to_unit, from_unit) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => unreachable!("constant formulas are isomorphic to I"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus_s::check_derivation_s;
    use crate::syntax::{parse_formula, parse_sequent_s};

    fn derives(s: &str) -> bool {
        let seq = parse_sequent_s(s).unwrap();
        match derivable_s(&seq) {
            Some(d) => {
                assert!(d.is_cut_free());
                assert_eq!(check_derivation_s(&d).unwrap(), seq);
                true
            }
            None => false,
        }
    }

    #[test]
    fn basic_search() {
        assert!(derives("|- I"));
        assert!(derives("p |- p"));
        assert!(derives("p, p -o q |- q"));
        assert!(derives("p -o q, p |- q"));
        assert!(derives("p * q |- q * p"));
        assert!(derives("p |- q -o q * p"));
        assert!(derives("I, p |- p"));
        assert!(!derives("p |- q"));
        assert!(!derives("(p -o I) -o I |- p"));
        assert!(derives("(p -o I) -o I, p -o I |- I"));
    }

    #[test]
    fn constants_are_interderivable() {
        assert!(derives("I * I, I -o I |- (I -o I) * I"));
        assert!(derives("I -o I |- I"));
        assert!(derives("|- I -o I"));
        for a in ["I", "I * I", "I -o I", "(I -o I) -o I * I"] {
            let f = parse_formula(a).unwrap();
            let (x, y) = const_iso_s(&f).unwrap();
            check_derivation_s(&x).unwrap();
            check_derivation_s(&y).unwrap();
        }
        let (x, y) = const_iso_s(&Formula::Unit).unwrap();
        assert_eq!((x.size(), y.size()), (1, 1));
        assert!(const_iso_s(&parse_formula("p").unwrap()).is_err());
    }

    #[test]
    fn splits_are_distinct() {
        let f = |s: &str| parse_formula(s).unwrap();
        let ant = vec![f("p"), f("p"), f("q")];
        assert_eq!(splits(&ant).len(), 6);
    }
}
