use std::fmt;

use super::derivation::{DerivationIL, RuleIL};
use crate::syntax::{AlphaFormula, Prime};

/// Degree and rank of a cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutMeasure {
    /// Number of `*` and `-o` in the cut formula.
    pub degree: usize,
    /// Rank of the cut formula in the left premise plus its rank in the
    /// right premise.
    pub rank: usize,
}

impl fmt::Display for CutMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.degree, self.rank)
    }
}

/// Rank of the consequent of `d`'s conclusion: the size of its class
/// under the successor relation.
pub fn consequent_rank(d: &DerivationIL) -> usize {
    1 + match d.rule {
        RuleIL::Axiom | RuleIL::ImpR => 0,
        RuleIL::Interchange { .. } => consequent_rank(&d.premises[0]),
        RuleIL::Cut { .. } | RuleIL::ImpL => consequent_rank(&d.premises[1]),
        RuleIL::TensorBoth => {
            let (l, r) = (&d.premises[0], &d.premises[1]);
            match (l.conclusion.con.is_unit(), r.conclusion.con.is_unit()) {
                (true, true) => consequent_rank(l) + consequent_rank(r),
                (true, false) => consequent_rank(r),
                (false, true) => consequent_rank(l),
                (false, false) => 0,
            }
        }
    }
}

/// Where the antecedent factor `i` of `d`'s conclusion comes from:
/// premise index and factor position, or `None` for a principal factor.
fn ant_successor(d: &DerivationIL, i: usize) -> Option<(usize, usize)> {
    match d.rule {
        RuleIL::Axiom => None,
        RuleIL::Interchange { g, a, b } => Some((0, if i < g || i >= g + a + b {
            i
        } else if i < g + b {
            i + a
        } else {
            i - b
        })),
        RuleIL::Cut { g } => {
            let c = d.premises[0].conclusion.ant.len();
            let a = d.premises[0].conclusion.con.len();
            if i < g {
                Some((1, i))
            } else if i < g + c {
                Some((0, i - g))
            } else {
                Some((1, i - c + a))
            }
        }
        RuleIL::ImpL => {
            let c = d.premises[0].conclusion.ant.len();
            let r = &d.premises[1].conclusion.ant;
            let g = d.conclusion.ant.len() - c - 1;
            if i < c {
                Some((0, i))
            } else if i == c {
                None
            } else {
                Some((1, r.len() - g + (i - c - 1)))
            }
        }
        RuleIL::ImpR => {
            let a = d.premises[0].conclusion.ant.len() - d.conclusion.ant.len();
            Some((0, a + i))
        }
        RuleIL::TensorBoth => {
            let a = d.premises[0].conclusion.ant.len();
            if i < a {
                Some((0, i))
            } else {
                Some((1, i - a))
            }
        }
    }
}

/// Rank of the prime factor at position `i` of the antecedent.
pub fn antecedent_rank(d: &DerivationIL, i: usize) -> usize {
    1 + match ant_successor(d, i) {
        None => 0,
        Some((k, j)) => antecedent_rank(&d.premises[k], j),
    }
}

fn measure_of(left: &DerivationIL, right: &DerivationIL, g: usize) -> CutMeasure {
    let a = &left.conclusion.con;
    let right_rank = if a.len() == 1 { antecedent_rank(right, g) } else { 1 };
    CutMeasure { degree: a.connectives(), rank: consequent_rank(left) + right_rank }
}

/// Measure of the cut reached from the root of `d` by following premise
/// indices in `path`, or `None` if there is no cut there.
pub fn cut_measure(d: &DerivationIL, path: &[usize]) -> Option<CutMeasure> {
    let mut node = d;
    for &i in path {
        node = node.premises.get(i)?;
    }
    match node.rule {
        RuleIL::Cut { g } => Some(measure_of(&node.premises[0], &node.premises[1], g)),
        _ => None,
    }
}

/// Measure used for termination: degree, then whether the cut formula is
/// not `I`, then rank. Cuts on `I` sort below letter cuts of degree 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Order(usize, bool, usize);

fn order(left: &DerivationIL, m: CutMeasure) -> Order {
    Order(m.degree, !left.conclusion.con.is_unit(), m.rank)
}

/// Eliminate every cut, topmost first, by the standard transformations.
/// Each transformation produces cuts of strictly smaller measure, which
/// is asserted.
pub fn eliminate_cuts(d: &DerivationIL) -> DerivationIL {
    let premises: Vec<DerivationIL> = d.premises.iter().map(eliminate_cuts).collect();
    match d.rule {
        RuleIL::Cut { g } => {
            let mut it = premises.into_iter();
            let (l, r) = (it.next().unwrap(), it.next().unwrap());
            reduce(l, r, g, None)
        }
        rule => DerivationIL { rule, conclusion: d.conclusion.clone(), premises },
    }
}

fn sub(left: DerivationIL, right: DerivationIL, g: usize, parent: Order) -> DerivationIL {
    reduce(left, right, g, Some(parent))
}

/// Cut-free derivation of the conclusion of a cut between two cut-free
/// derivations.
fn reduce(left: DerivationIL, right: DerivationIL, g: usize, parent: Option<Order>) -> DerivationIL {
    let m = measure_of(&left, &right, g);
    let o = order(&left, m);
    if let Some(p) = parent {
        assert!(o < p, "cut measure did not decrease: {o:?} after {p:?}");
    }
    let a = left.conclusion.con.clone();
    let lr = consequent_rank(&left);
    let rr = m.rank - lr;

    // (0), (1a)
    if left.rule == RuleIL::Axiom {
        return right;
    }
    if right.rule == RuleIL::Axiom {
        return framed(left, &right.conclusion.ant, g);
    }
    if lr == 1 && rr == 1 {
        return match (left.rule, right.rule) {
            (RuleIL::ImpR, RuleIL::ImpL) => principal_imp(left, right, o),
            (RuleIL::TensorBoth, _) => principal_tensor(left, right, g, o),
            (l, r) => unreachable!("rank-two cut between {l:?} and {r:?}"),
        };
    }
    if lr > 1 {
        left_case(left, right, g, o, &a)
    } else {
        right_case(left, right, g, o)
    }
}

/// `G * C * E |- G * A * E` from `C |- A`, when the right premise is the
/// axiom on `G * A * E`. With `G` and `E` empty this is (1a).
fn framed(left: DerivationIL, ant: &AlphaFormula, g: usize) -> DerivationIL {
    let n = left.conclusion.con.len();
    let (pre, post) = (ant.slice(0..g), ant.slice(g + n..ant.len()));
    let mut d = left;
    if !post.is_unit() {
        d = DerivationIL::tensor_both(d, DerivationIL::axiom(post));
    }
    if !pre.is_unit() {
        d = DerivationIL::tensor_both(DerivationIL::axiom(pre), d);
    }
    d
}

/// (1b)
fn principal_imp(left: DerivationIL, right: DerivationIL, o: Order) -> DerivationIL {
    let d1 = left.premises.into_iter().next().unwrap();
    let mut rp = right.premises.into_iter();
    let (d2, d3) = (rp.next().unwrap(), rp.next().unwrap());
    let d4 = sub(d1, d3, 0, o);
    sub(d2, d4, 0, o)
}

/// (1c)
fn principal_tensor(left: DerivationIL, right: DerivationIL, g: usize, o: Order) -> DerivationIL {
    let mut lp = left.premises.into_iter();
    let (d1, d2) = (lp.next().unwrap(), lp.next().unwrap());
    let c1 = d1.conclusion.ant.len();
    let upper = sub(d1, right, g, o);
    sub(d2, upper, g + c1, o)
}

/// Factor count of the antecedent of the left premise and of the
/// implication codomain, for an implication-left node.
fn imp_l_shape(d: &DerivationIL) -> (usize, usize) {
    let c = d.premises[0].conclusion.ant.len();
    match &d.conclusion.ant.factors()[c] {
        Prime::Imp(_, b) => (c, b.len()),
        Prime::Letter(_) => unreachable!("implication-left node without implication"),
    }
}

fn left_case(left: DerivationIL, right: DerivationIL, g: usize, o: Order, a: &AlphaFormula) -> DerivationIL {
    let rule = left.rule;
    let shape = (rule == RuleIL::ImpL).then(|| imp_l_shape(&left));
    let mut lp = left.premises.into_iter();
    match rule {
        // (2a)
        RuleIL::Interchange { g: g1, a: na, b: nb } => {
            let d1 = lp.next().unwrap();
            let cut = sub(d1, right, g, o);
            DerivationIL::interchange_visible(cut, g + g1, na, nb)
        }
        // (2b)
        RuleIL::ImpL => {
            let (c1, c3) = shape.unwrap();
            let (d1, d2) = (lp.next().unwrap(), lp.next().unwrap());
            let upper = sub(d2, right, g, o);
            let moved = DerivationIL::interchange_visible(upper, 0, g, c3);
            let imp = DerivationIL::imp_l(d1, moved, c3);
            DerivationIL::interchange_visible(imp, 0, c1 + 1, g)
        }
        RuleIL::TensorBoth => {
            let (d1, d2) = (lp.next().unwrap(), lp.next().unwrap());
            let c1 = d1.conclusion.ant.len();
            if !a.is_unit() && d1.conclusion.con.is_unit() {
                // (2c) with the unit on the left
                let upper = sub(d2, right, g, o);
                sub(d1, upper, g, o)
            } else {
                // (2c), (2d)
                debug_assert!(d2.conclusion.con.is_unit());
                let upper = sub(d1, right, g, o);
                sub(d2, upper, g + c1, o)
            }
        }
        r => unreachable!("left premise of rank above one ends with {r:?}"),
    }
}

fn right_case(left: DerivationIL, right: DerivationIL, g: usize, o: Order) -> DerivationIL {
    let c = left.conclusion.ant.len();
    let grow = |n: usize| n + c - 1;
    let rule = right.rule;
    let (j, k) = ant_successor(&right, g).expect("right rank above one");
    let shape = (rule == RuleIL::ImpL).then(|| imp_l_shape(&right));
    let mut rp = right.premises.into_iter();
    match rule {
        // (2e)
        RuleIL::Interchange { g: g1, a: na, b: nb } => {
            let d2 = rp.next().unwrap();
            let cut = sub(left, d2, k, o);
            if g < g1 {
                DerivationIL::interchange_visible(cut, grow(g1), na, nb)
            } else if g >= g1 + na + nb {
                DerivationIL::interchange_visible(cut, g1, na, nb)
            } else if g < g1 + nb {
                DerivationIL::interchange_visible(cut, g1, na, grow(nb))
            } else {
                DerivationIL::interchange_visible(cut, g1, grow(na), nb)
            }
        }
        // (2f)
        RuleIL::ImpL => {
            let (_, b) = shape.unwrap();
            let (d2, d3) = (rp.next().unwrap(), rp.next().unwrap());
            if j == 0 {
                DerivationIL::imp_l(sub(left, d2, k, o), d3, b)
            } else {
                DerivationIL::imp_l(d2, sub(left, d3, k, o), b)
            }
        }
        // (2g)
        RuleIL::ImpR => {
            let d2 = rp.next().unwrap();
            let a = k - g;
            DerivationIL::imp_r(sub(left, d2, k, o), a)
        }
        // (2h)
        RuleIL::TensorBoth => {
            let (d2, d3) = (rp.next().unwrap(), rp.next().unwrap());
            if j == 0 {
                DerivationIL::tensor_both(sub(left, d2, k, o), d3)
            } else {
                DerivationIL::tensor_both(d2, sub(left, d3, k, o))
            }
        }
        r => unreachable!("right premise of rank above one ends with {r:?}"),
    }
}

/// Remove tensor rules with an `I |- I` premise and interchanges of an
/// empty block, keeping the conclusion.
pub fn clean(d: &DerivationIL) -> DerivationIL {
    let premises: Vec<DerivationIL> = d.premises.iter().map(clean).collect();
    let unit_axiom = |p: &DerivationIL| p.conclusion.ant.is_unit() && p.conclusion.con.is_unit();
    match d.rule {
        RuleIL::TensorBoth if unit_axiom(&premises[0]) => premises.into_iter().nth(1).unwrap(),
        RuleIL::TensorBoth if unit_axiom(&premises[1]) => premises.into_iter().next().unwrap(),
        RuleIL::Interchange { a, b, .. } if a == 0 || b == 0 => premises.into_iter().next().unwrap(),
        rule => DerivationIL { rule, conclusion: d.conclusion.clone(), premises },
    }
}
