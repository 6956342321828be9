//! Splitting cut-free derivations along a partition of the antecedent.
//!
//! Each recursion carries one tag per antecedent formula of the current
//! node and returns derivations whose antecedents are exactly the tagged
//! subsequences, in order. Reordering is done with interchanges.

use std::collections::BTreeSet;

use thiserror::Error;

use super::const_proper::check_const_proper;
use super::derivation::{check_derivation_s, DerivationS, RuleError, RuleS};
use super::search::derivable_s;
use crate::syntax::{Formula, Letter, SequentS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("derivation contains a cut")]
    NotCutFree,
    #[error(transparent)]
    Ill(#[from] RuleError),
    #[error("letter {0} occurs on both sides of the partition")]
    NotPrime(Letter),
    #[error("sequent is not proper: contains `{0}`")]
    NotProper(String),
    #[error("conclusion `{0}` does not match the given partition")]
    Mismatch(String),
    #[error("hypothesis fails at `{0}`")]
    Hypothesis(String),
}

type Pair = (DerivationS, DerivationS);

/// From a cut-free derivation of a permutation of `G, D |- A`, with `D`
/// sharing no letter with `G, A`, build derivations of `D |- I` and `G |- A`.
pub fn split_weak(d: &DerivationS, gamma: &[Formula], delta: &[Formula]) -> Result<Pair, SplitError> {
    let s = precheck(d)?;
    disjoint(delta.iter(), gamma.iter().chain([&s.consequent]))?;
    let tags = assign(&s, &[gamma, delta])?;
    let bools: Vec<bool> = tags.iter().map(|&t| t == 1).collect();
    let (x, y) = weak(d, &bools)?;
    Ok((fit(x, delta)?, fit(y, gamma)?))
}

/// From a cut-free derivation of a permutation of `G, D |- A * B`, with
/// `G, A` sharing no letter with `D, B`, build `G |- A` and `D |- B`.
pub fn split_tensor(d: &DerivationS, gamma: &[Formula], delta: &[Formula]) -> Result<Pair, SplitError> {
    let s = precheck(d)?;
    let Formula::Tensor(a, b) = &s.consequent else {
        return Err(SplitError::Mismatch(s.to_string()));
    };
    disjoint(gamma.iter().chain([&**a]), delta.iter().chain([&**b]))?;
    let tags = assign(&s, &[gamma, delta])?;
    let bools: Vec<bool> = tags.iter().map(|&t| t == 1).collect();
    let (x, y) = tensor(d, &bools)?;
    Ok((fit(x, gamma)?, fit(y, delta)?))
}

/// From a cut-free derivation of a proper permutation of
/// `G, A -o B, D |- C`, with `G, A` sharing no letter with `B, D, C`,
/// build `G |- A` and `B, D |- C`.
pub fn split_imp(
    d: &DerivationS,
    gamma: &[Formula],
    a: &Formula,
    b: &Formula,
    delta: &[Formula],
) -> Result<Pair, SplitError> {
    let s = precheck(d)?;
    if let Some(w) = s
        .antecedent
        .iter()
        .chain([&s.consequent])
        .find_map(|f| f.improper_witness())
    {
        return Err(SplitError::NotProper(w.to_string()));
    }
    disjoint(gamma.iter().chain([a]), delta.iter().chain([b, &s.consequent]))?;
    let imp = [Formula::imp(a.clone(), b.clone())];
    let raw = assign(&s, &[&imp, gamma, delta])?;
    let tags: Vec<Tag> = raw
        .iter()
        .map(|&t| match t {
            0 => Tag::Imp,
            1 => Tag::G,
            _ => Tag::D,
        })
        .collect();
    let (x, y) = Imp { a, b }.split(d, &tags)?;
    let mut second = vec![b.clone()];
    second.extend(delta.iter().cloned());
    Ok((fit(x, gamma)?, fit(y, &second)?))
}

fn precheck(d: &DerivationS) -> Result<SequentS, SplitError> {
    let s = check_derivation_s(d)?;
    if !d.is_cut_free() {
        return Err(SplitError::NotCutFree);
    }
    Ok(s)
}

fn disjoint<'a>(
    xs: impl Iterator<Item = &'a Formula>,
    ys: impl Iterator<Item = &'a Formula>,
) -> Result<(), SplitError> {
    let mut lx = BTreeSet::new();
    for f in xs {
        lx.extend(f.letters());
    }
    for f in ys {
        if let Some(l) = f.letters().into_iter().find(|l| lx.contains(l)) {
            return Err(SplitError::NotPrime(l));
        }
    }
    Ok(())
}

/// Tag each antecedent formula with the index of the group it is taken
/// from. Equal formulas are interchangeable, so a greedy match suffices.
fn assign(s: &SequentS, groups: &[&[Formula]]) -> Result<Vec<usize>, SplitError> {
    let mut left: Vec<Vec<&Formula>> = groups.iter().map(|g| g.iter().collect()).collect();
    let mut tags = Vec::new();
    for f in &s.antecedent {
        let g = (0..left.len())
            .find(|&g| left[g].contains(&f))
            .ok_or_else(|| SplitError::Mismatch(s.to_string()))?;
        let k = left[g].iter().position(|x| *x == f).unwrap();
        left[g].remove(k);
        tags.push(g);
    }
    if left.iter().any(|g| !g.is_empty()) {
        return Err(SplitError::Mismatch(s.to_string()));
    }
    Ok(tags)
}

fn fit(d: DerivationS, target: &[Formula]) -> Result<DerivationS, SplitError> {
    let shown = d.conclusion.to_string();
    d.permute(target).ok_or(SplitError::Hypothesis(shown))
}

fn search(ant: &[Formula], con: &Formula) -> Result<DerivationS, SplitError> {
    let s = SequentS::new(ant.to_vec(), con.clone());
    derivable_s(&s).ok_or_else(|| SplitError::Hypothesis(s.to_string()))
}

fn pick<T: Clone>(xs: &[Formula], tags: &[T], keep: impl Fn(&T) -> bool) -> Vec<Formula> {
    xs.iter().zip(tags).filter(|(_, t)| keep(t)).map(|(f, _)| f.clone()).collect()
}

/// `X |- I` and `Y |- C` give `X, Y |- C`, through `I * C |- C`.
fn absorb_unit(x: DerivationS, y: DerivationS) -> DerivationS {
    let c = y.conclusion.consequent.clone();
    let both = DerivationS::tensor_r(x, y);
    let elim = DerivationS::tensor_l(DerivationS::weaken(DerivationS::axiom(c)), 0);
    DerivationS::cut(both, elim, 0)
}

fn swap_at<T: Clone>(tags: &[T], i: usize) -> Vec<T> {
    let mut t = tags.to_vec();
    t.swap(i, i + 1);
    t
}

fn dup_at<T: Clone>(tags: &[T], i: usize) -> Vec<T> {
    let mut t = tags[..=i].to_vec();
    t.extend(tags[i..].iter().cloned());
    t
}

fn cons<T: Clone>(head: T, tail: &[T]) -> Vec<T> {
    let mut t = vec![head];
    t.extend(tail.iter().cloned());
    t
}

fn negate(tags: &[bool]) -> Vec<bool> {
    tags.iter().map(|t| !t).collect()
}

/// Returns `(D |- I, G |- A)` where `true` tags mark `D`.
fn weak(d: &DerivationS, tags: &[bool]) -> Result<Pair, SplitError> {
    let ant = &d.conclusion.antecedent;
    let con = &d.conclusion.consequent;
    let p = &d.premises;
    Ok(match d.rule {
        RuleS::Axiom => {
            if tags[0] {
                (search(ant, &Formula::Unit)?, search(&[], con)?)
            } else {
                (DerivationS::axiom_i(), d.clone())
            }
        }
        RuleS::AxiomI => (DerivationS::axiom_i(), DerivationS::axiom_i()),
        RuleS::Weakening => {
            let (x, y) = weak(&p[0], &tags[1..])?;
            if tags[0] {
                (DerivationS::weaken(x), y)
            } else {
                (x, DerivationS::weaken(y))
            }
        }
        RuleS::Interchange(i) => {
            let (x, y) = weak(&p[0], &swap_at(tags, i))?;
            (fit(x, &pick(ant, tags, |t| *t))?, fit(y, &pick(ant, tags, |t| !*t))?)
        }
        RuleS::TensorL(i) => {
            let t = tags[i];
            let (x, y) = weak(&p[0], &dup_at(tags, i))?;
            let at = tags[..i].iter().filter(|&&u| u == t).count();
            if t {
                (DerivationS::tensor_l(x, at), y)
            } else {
                (x, DerivationS::tensor_l(y, at))
            }
        }
        RuleS::TensorR(k) => {
            let (xl, yl) = weak(&p[0], &tags[..k])?;
            let (xr, yr) = weak(&p[1], &tags[k..])?;
            (absorb_unit(xl, xr), DerivationS::tensor_r(yl, yr))
        }
        RuleS::ImpL(k) => {
            let rtags = cons(tags[k], &tags[k + 1..]);
            if tags[k] {
                let (ul, xl) = weak(&p[0], &negate(&tags[..k]))?;
                let (xr, yr) = weak(&p[1], &rtags)?;
                (DerivationS::imp_l(xl, xr), absorb_unit(ul, yr))
            } else {
                let (xl, yl) = weak(&p[0], &tags[..k])?;
                let (xr, yr) = weak(&p[1], &rtags)?;
                (absorb_unit(xl, xr), DerivationS::imp_l(yl, yr))
            }
        }
        RuleS::ImpR => {
            let (x, y) = weak(&p[0], &cons(false, tags))?;
            (x, DerivationS::imp_r(y))
        }
        RuleS::Cut(_) => return Err(SplitError::NotCutFree),
    })
}

/// Returns `(G |- A, D |- B)` for a conclusion `... |- A * B`, where
/// `true` tags mark `D`.
fn tensor(d: &DerivationS, tags: &[bool]) -> Result<Pair, SplitError> {
    let ant = &d.conclusion.antecedent;
    let Formula::Tensor(a, b) = &d.conclusion.consequent else {
        return Err(SplitError::Hypothesis(d.conclusion.to_string()));
    };
    let p = &d.premises;
    Ok(match d.rule {
        RuleS::Axiom => {
            if tags[0] {
                (search(&[], a)?, search(ant, b)?)
            } else {
                (search(ant, a)?, search(&[], b)?)
            }
        }
        RuleS::Weakening => {
            let (x, y) = tensor(&p[0], &tags[1..])?;
            if tags[0] {
                (x, DerivationS::weaken(y))
            } else {
                (DerivationS::weaken(x), y)
            }
        }
        RuleS::Interchange(i) => {
            let (x, y) = tensor(&p[0], &swap_at(tags, i))?;
            (fit(x, &pick(ant, tags, |t| !*t))?, fit(y, &pick(ant, tags, |t| *t))?)
        }
        RuleS::TensorL(i) => {
            let t = tags[i];
            let (x, y) = tensor(&p[0], &dup_at(tags, i))?;
            let at = tags[..i].iter().filter(|&&u| u == t).count();
            if t {
                (x, DerivationS::tensor_l(y, at))
            } else {
                (DerivationS::tensor_l(x, at), y)
            }
        }
        RuleS::TensorR(k) => {
            let (ul, x) = weak(&p[0], &tags[..k])?;
            let (ur, y) = weak(&p[1], &negate(&tags[k..]))?;
            (
                fit(absorb_unit(ur, x), &pick(ant, tags, |t| !*t))?,
                absorb_unit(ul, y),
            )
        }
        RuleS::ImpL(k) => {
            let rtags = cons(tags[k], &tags[k + 1..]);
            if tags[k] {
                let (ul, xl) = weak(&p[0], &negate(&tags[..k]))?;
                let (gr, dr) = tensor(&p[1], &rtags)?;
                (absorb_unit(ul, gr), DerivationS::imp_l(xl, dr))
            } else {
                let (ul, gl) = weak(&p[0], &tags[..k])?;
                let (gr, dr) = tensor(&p[1], &rtags)?;
                (DerivationS::imp_l(gl, gr), absorb_unit(ul, dr))
            }
        }
        RuleS::AxiomI | RuleS::ImpR => return Err(SplitError::Hypothesis(d.conclusion.to_string())),
        RuleS::Cut(_) => return Err(SplitError::NotCutFree),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tag {
    /// The distinguished implication `A -o B`.
    Imp,
    G,
    D,
}

struct Imp<'a> {
    a: &'a Formula,
    b: &'a Formula,
}

fn g_side(tags: &[Tag]) -> Vec<bool> {
    tags.iter().map(|t| *t == Tag::G).collect()
}

fn d_side(tags: &[Tag]) -> Vec<bool> {
    tags.iter().map(|t| *t == Tag::D).collect()
}

impl Imp<'_> {
    /// The antecedent of the second output: `A -o B` replaced by `B`,
    /// `G` formulas dropped.
    fn second(&self, ant: &[Formula], tags: &[Tag]) -> Vec<Formula> {
        ant.iter()
            .zip(tags)
            .filter_map(|(f, t)| match t {
                Tag::Imp => Some(self.b.clone()),
                Tag::D => Some(f.clone()),
                Tag::G => None,
            })
            .collect()
    }

    /// Returns `(G |- A, B, D |- C)` with antecedents in tag order.
    fn split(&self, d: &DerivationS, tags: &[Tag]) -> Result<Pair, SplitError> {
        let ant = &d.conclusion.antecedent;
        let con = &d.conclusion.consequent;
        let p = &d.premises;
        let first_ant = pick(ant, tags, |t| *t == Tag::G);
        Ok(match d.rule {
            RuleS::Axiom => (search(&[], self.a)?, search(std::slice::from_ref(self.b), con)?),
            RuleS::Weakening => {
                let (x, y) = self.split(&p[0], &tags[1..])?;
                if tags[0] == Tag::G {
                    (DerivationS::weaken(x), y)
                } else {
                    (x, DerivationS::weaken(y))
                }
            }
            RuleS::Interchange(i) => {
                let (x, y) = self.split(&p[0], &swap_at(tags, i))?;
                (fit(x, &first_ant)?, fit(y, &self.second(ant, tags))?)
            }
            RuleS::TensorL(i) => {
                let t = tags[i];
                let (x, y) = self.split(&p[0], &dup_at(tags, i))?;
                if t == Tag::G {
                    let at = tags[..i].iter().filter(|u| **u == Tag::G).count();
                    (DerivationS::tensor_l(x, at), y)
                } else {
                    let at = tags[..i].iter().filter(|u| **u != Tag::G).count();
                    (x, DerivationS::tensor_l(y, at))
                }
            }
            RuleS::ImpR => {
                let (x, y) = self.split(&p[0], &cons(Tag::D, tags))?;
                (x, DerivationS::imp_r(y))
            }
            RuleS::TensorR(k) => {
                if tags[..k].contains(&Tag::Imp) {
                    let (gl, dl) = self.split(&p[0], &tags[..k])?;
                    let (ur, dr) = weak(&p[1], &g_side(&tags[k..]))?;
                    (fit(absorb_unit(ur, gl), &first_ant)?, DerivationS::tensor_r(dl, dr))
                } else {
                    let (ul, dl) = weak(&p[0], &g_side(&tags[..k]))?;
                    let (gr, dr) = self.split(&p[1], &tags[k..])?;
                    (absorb_unit(ul, gr), DerivationS::tensor_r(dl, dr))
                }
            }
            RuleS::ImpL(k) => self.imp_left(d, tags, k, first_ant)?,
            RuleS::AxiomI => return Err(SplitError::Hypothesis(d.conclusion.to_string())),
            RuleS::Cut(_) => return Err(SplitError::NotCutFree),
        })
    }

    fn imp_left(&self, d: &DerivationS, tags: &[Tag], k: usize, first_ant: Vec<Formula>) -> Result<Pair, SplitError> {
        let p = &d.premises;
        let ltags = &tags[..k];
        let in_left = ltags.contains(&Tag::Imp);
        Ok(match (tags[k], in_left) {
            // The distinguished implication is the principal formula.
            (Tag::Imp, _) => {
                let (ul, gl) = weak(&p[0], &d_side(ltags))?;
                let (ur, dr) = weak(&p[1], &cons(false, &g_side(&tags[k + 1..])))?;
                (fit(absorb_unit(ur, gl), &first_ant)?, absorb_unit(ul, dr))
            }
            (Tag::G, false) => {
                let (ul, gl) = weak(&p[0], &d_side(ltags))?;
                let (gr, dr) = self.split(&p[1], &cons(Tag::G, &tags[k + 1..]))?;
                (DerivationS::imp_l(gl, gr), absorb_unit(ul, dr))
            }
            (Tag::D, false) => {
                let (ul, xl) = weak(&p[0], &g_side(ltags))?;
                let (gr, dr) = self.split(&p[1], &cons(Tag::D, &tags[k + 1..]))?;
                (absorb_unit(ul, gr), DerivationS::imp_l(xl, dr))
            }
            (Tag::D, true) => {
                let (gl, dl) = self.split(&p[0], ltags)?;
                let (ur, dr) = weak(&p[1], &cons(false, &g_side(&tags[k + 1..])))?;
                (fit(absorb_unit(ur, gl), &first_ant)?, DerivationS::imp_l(dl, dr))
            }
            // The only case that needs propriety: everything on the left
            // turns out to be constant.
            (Tag::G, true) => {
                let right = &p[1].conclusion;
                let rtags = cons(true, &g_side(&tags[k + 1..]));
                let (_, dr) = weak(&p[1], &rtags)?;
                let unit_ant = pick(&right.antecedent, &rtags, |t| *t);
                let cut_free = search(&unit_ant, &Formula::Unit)?;
                check_const_proper(&cut_free).map_err(|_| SplitError::Hypothesis(cut_free.conclusion.to_string()))?;
                check_const_proper(&p[0]).map_err(|_| SplitError::Hypothesis(p[0].conclusion.to_string()))?;
                let gl = search(&first_ant, self.a)?;
                let left_rest = self.second(&p[0].conclusion.antecedent, ltags);
                let ul = search(&left_rest, &Formula::Unit)?;
                (gl, absorb_unit(ul, dr))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_sequent_s};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn fs(xs: &[&str]) -> Vec<Formula> {
        xs.iter().map(|x| f(x)).collect()
    }

    fn prove(s: &str) -> DerivationS {
        derivable_s(&parse_sequent_s(s).unwrap()).unwrap()
    }

    fn checks(pair: &Pair, first: &str, second: &str) {
        assert_eq!(check_derivation_s(&pair.0).unwrap(), parse_sequent_s(first).unwrap());
        assert_eq!(check_derivation_s(&pair.1).unwrap(), parse_sequent_s(second).unwrap());
    }

    #[test]
    fn weak_base_case() {
        let out = split_weak(&DerivationS::axiom(f("p")), &fs(&["p"]), &[]).unwrap();
        checks(&out, "|- I", "p |- p");
    }

    #[test]
    fn weak_with_constant_part() {
        let d = prove("I -o I, p, p -o q |- q");
        let out = split_weak(&d, &fs(&["p", "p -o q"]), &fs(&["I -o I"])).unwrap();
        checks(&out, "I -o I |- I", "p, p -o q |- q");
    }

    #[test]
    fn weak_tensor_right_recombines_units() {
        let d = prove("I -o I, p, I * I |- p * I");
        let out = split_weak(&d, &fs(&["p"]), &fs(&["I * I", "I -o I"])).unwrap();
        checks(&out, "I * I, I -o I |- I", "p |- p * I");
    }

    #[test]
    fn weak_rejects_shared_letter() {
        let d = prove("p, p -o q |- q");
        let e = split_weak(&d, &fs(&["p"]), &fs(&["p -o q"])).unwrap_err();
        assert!(matches!(e, SplitError::NotPrime(_)));
    }

    #[test]
    fn tensor_cases() {
        let d = prove("p, q |- p * q");
        checks(&split_tensor(&d, &fs(&["p"]), &fs(&["q"])).unwrap(), "p |- p", "q |- q");
        let d = prove("q, r -o s, p, r |- p * (q * s)");
        let out = split_tensor(&d, &fs(&["p"]), &fs(&["q", "r -o s", "r"])).unwrap();
        checks(&out, "p |- p", "q, r -o s, r |- q * s");
        let d = prove("|- I * I");
        checks(&split_tensor(&d, &[], &[]).unwrap(), "|- I", "|- I");
    }

    #[test]
    fn imp_axiom_shaped() {
        let d = prove("p, p -o q |- q");
        let out = split_imp(&d, &fs(&["p"]), &f("p"), &f("q"), &[]).unwrap();
        checks(&out, "p |- p", "q |- q");
    }

    #[test]
    fn imp_rejects_improper_counterexample() {
        let d = DerivationS::interchange(
            DerivationS::imp_l(DerivationS::axiom(f("p -o I")), DerivationS::axiom(f("I"))),
            0,
        );
        let e = split_imp(&d, &fs(&["(p -o I) -o I"]), &f("p"), &f("I"), &[]).unwrap_err();
        assert!(matches!(e, SplitError::NotProper(_)));
    }

    #[test]
    fn imp_nested() {
        let d = prove("r -o p, r, p -o q, s |- q * s");
        let out = split_imp(&d, &fs(&["r -o p", "r"]), &f("p"), &f("q"), &fs(&["s"])).unwrap();
        checks(&out, "r -o p, r |- p", "q, s |- q * s");
    }
}
