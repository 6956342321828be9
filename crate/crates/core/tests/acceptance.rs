//! The acceptance criteria, one pass/fail line each.
//!
//! Run with `cargo test --test acceptance`. Criterion 2 is exhaustive only
//! up to `LINCOH_C2_MAX_SIZE` constructors (default 5); the full bound of
//! 8 does not fit in memory or time on a small machine, so that line
//! reports FAIL unless the bound is raised to 8.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lincoh::calculus_il::{check_derivation_il, code, derivable_il, eliminate_cuts};
use lincoh::calculus_s::{check_derivation_s, derivable_s, split_imp, split_tensor, split_weak, DerivationS, SplitError};
use lincoh::central::{perm_normal_form, Perm};
use lincoh::gen::{
    enumerate_formulas, enumerate_terms, random_derivation_il_bounded, random_split_instance, random_term,
    random_unit_term, SplitKind, TermShape,
};
use lincoh::links::{eq_terms, links_of, EqVerdict, LinkSet};
use lincoh::syntax::{letters_even, parse_alpha, parse_formula, parse_sequent_s, AlphaFormula, Letter, SequentIL};
use lincoh::terms::{oracle_equal, search, TypedTerm, Verdict, DEFAULT_BUDGET, N};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn tt(s: &str) -> TypedTerm {
    TypedTerm::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn edges(l: &LinkSet) -> Vec<(String, String)> {
    l.edges.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn pairs(ps: &[(&str, &str)]) -> Vec<(String, String)> {
    ps.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn distinguished_pair() -> Outcome {
    let start = Instant::now();
    let f = tt("imp[p]((eps[p, q] * 1[p]) o (1[p] * sym[p, p -o q]) o (sym[p, p] * 1[p -o q])) o eta[p, p * (p -o q)]");
    let g = tt("imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]");
    let ty_ok = f.ty.to_string() == "p * (p -o q) |- p -o q * p" && f.ty == g.ty;
    let (lf, lg) = (links_of(&f), links_of(&g));
    let f_ok = edges(&lf) == pairs(&[("ant.1", "ant.2.d.1"), ("ant.2.c.1", "con.1.c.1"), ("con.1.d.1", "con.1.c.2")]);
    let g_ok = edges(&lg) == pairs(&[("ant.1", "con.1.c.2"), ("ant.2.d.1", "con.1.d.1"), ("ant.2.c.1", "con.1.c.1")]);
    let verdict = eq_terms(&f, &g);
    let elapsed = start.elapsed();
    outcome(
        ty_ok && f_ok && g_ok && verdict == EqVerdict::NotEqual && elapsed < Duration::from_secs(1),
        format!("f links {lf}; g links {lg}; eq_terms {verdict:?}; {elapsed:.2?}"),
    )
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    let max_size: usize = std::env::var("LINCOH_C2_MAX_SIZE").ok().and_then(|s| s.parse().ok()).unwrap_or(5);
    let cross_budget: usize =
        std::env::var("LINCOH_C2_CROSS_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(2_000);
    let atoms: Vec<AlphaFormula> = ["I", "p", "q"].iter().map(|s| parse_alpha(s).unwrap()).collect();
    let terms = enumerate_terms(max_size, &atoms, 3);
    let total = terms.len();

    // Terms with the same canonical form are equal at distance 0, so one
    // representative per canonical form suffices.
    let mut by_type: HashMap<SequentIL, HashMap<N, TypedTerm>> = HashMap::new();
    for t in terms.into_iter().filter(|t| t.ty.is_proper()) {
        by_type.entry(t.ty.clone()).or_default().entry(N::from_term(&t.term)).or_insert(t);
    }
    let (mut same, mut same_equal, mut undecided, mut disjoint, mut cross, mut wrong) = (0, 0, 0, 0, 0, 0);
    for group in by_type.values().filter(|g| g.len() > 1) {
        let mut by_links: HashMap<LinkSet, Vec<&N>> = HashMap::new();
        for (n, t) in group {
            by_links.entry(links_of(t)).or_default().push(n);
        }
        // Within a link class, every member against one representative:
        // the oracle must never prove them different.
        for ns in by_links.values() {
            for n in &ns[1..] {
                same += 1;
                match search(ns[0].clone(), (*n).clone(), DEFAULT_BUDGET) {
                    Verdict::Equal { .. } => same_equal += 1,
                    Verdict::Unknown { exhausted: true } => disjoint += 1,
                    Verdict::Unknown { exhausted: false } => undecided += 1,
                }
            }
        }
        // Across link classes the oracle must never find a path.
        let reps: Vec<&N> = by_links.values().map(|v| v[0]).collect();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                cross += 1;
                if search(reps[i].clone(), reps[j].clone(), cross_budget).is_equal() {
                    wrong += 1;
                }
            }
        }
    }
    let clean = wrong == 0 && disjoint == 0 && undecided == 0;
    outcome(
        clean && max_size >= 8,
        format!(
            "{total} terms up to {max_size} constructors (bound 8 required); link-equal pairs {same}: oracle Equal {same_equal}, undecided {undecided}, disjoint {disjoint}; cross-class pairs {cross} at budget {cross_budget}: oracle Equal {wrong}; {:.1?}",
            start.elapsed()
        ),
    )
}

fn cut_elimination() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let letters = [Letter::new("p"), Letter::new("q")];
    let (mut ok, mut small, mut small_equal) = (0, 0, 0);
    for _ in 0..1000 {
        let cuts = rng.gen_range(1..=3);
        let d = random_derivation_il_bounded(&mut rng, &letters, cuts, 2, 6);
        let e = eliminate_cuts(&d);
        let (cd, ce) = (code(&d), code(&e));
        if e.is_cut_free() && check_derivation_il(&e).as_ref() == Ok(&d.conclusion) && links_of(&ce) == links_of(&cd) {
            ok += 1;
        }
        if cd.term.size() <= 10 {
            small += 1;
            if oracle_equal(&ce, &cd, DEFAULT_BUDGET).unwrap().is_equal() {
                small_equal += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        ok == 1000 && small_equal == small && elapsed < Duration::from_secs(300),
        format!("{ok}/1000 cut-free with conclusion and links preserved; oracle-equal {small_equal}/{small} with code size <= 10; {elapsed:.1?}"),
    )
}

fn normal_form_count() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut ok = true;
    let mut factorial = 1;
    for m in 1..=6 {
        factorial *= m;
        let forms: std::collections::HashSet<String> =
            Perm::all(m).iter().map(|p| perm_normal_form(p).to_string()).collect();
        ok &= forms.len() == factorial;
        counts.push(forms.len());
    }
    let elapsed = start.elapsed();
    outcome(ok && elapsed < Duration::from_secs(10), format!("distinct normal forms for m = 1..6: {counts:?}; {elapsed:.2?}"))
}

fn even_occurrences() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut violations = 0;
    for _ in 0..10_000 {
        let size = rng.gen_range(1..=10);
        let t = random_term(&mut rng, &TermShape::new(&["p", "q", "r"], size));
        if !letters_even(&t.ty) {
            violations += 1;
        }
    }
    outcome(violations == 0, format!("10000 random terms, {violations} violations"))
}

fn non_derivability() -> Outcome {
    let start = Instant::now();
    let mut seen = std::collections::HashSet::new();
    let mut derivable = 0;
    for f in enumerate_formulas(&["p", "q"], false, 3) {
        let a = f.alpha();
        if seen.insert(a.clone()) && derivable_il(&SequentIL::new(a, AlphaFormula::unit())).is_some() {
            derivable += 1;
        }
    }
    let double_neg = derivable_s(&parse_sequent_s("(p -o I) -o I |- p").unwrap()).is_some();
    let elapsed = start.elapsed();
    outcome(
        derivable == 0 && !double_neg && elapsed < Duration::from_secs(30),
        format!("{} I-free formulas A, A |- I derivable for {derivable}; (p -o I) -o I |- p derivable: {double_neg}; {elapsed:.2?}", seen.len()),
    )
}

fn splitting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut total, mut ok) = (0, 0);
    for (kind, want) in [(SplitKind::Weak, 67), (SplitKind::Tensor, 67), (SplitKind::Imp, 66)] {
        let mut got = 0;
        while got < want {
            let Some(i) = random_split_instance(&mut rng, kind) else { continue };
            got += 1;
            total += 1;
            let out = match kind {
                SplitKind::Weak => split_weak(&i.derivation, &i.gamma, &i.delta),
                SplitKind::Tensor => split_tensor(&i.derivation, &i.gamma, &i.delta),
                SplitKind::Imp => {
                    let (a, b) = i.imp.clone().unwrap();
                    split_imp(&i.derivation, &i.gamma, &a, &b, &i.delta)
                }
            };
            if let Ok((x, y)) = out {
                if check_derivation_s(&x).is_ok() && check_derivation_s(&y).is_ok() {
                    ok += 1;
                }
            }
        }
    }
    let f = |s: &str| parse_formula(s).unwrap();
    let d = DerivationS::interchange(
        DerivationS::imp_l(DerivationS::axiom(f("p -o I")), DerivationS::axiom(f("I"))),
        0,
    );
    let rejected = matches!(
        split_imp(&d, &[f("(p -o I) -o I")], &f("p"), &f("I"), &[]),
        Err(SplitError::NotProper(_))
    );
    outcome(
        ok == total && total == 200 && rejected,
        format!("{ok}/{total} instances split into checking derivations; non-proper counterexample rejected: {rejected}"),
    )
}

const EQUALITIES: &[(&str, &str, &str)] = &[
    ("cat1 right", "sym[p, q] o 1[p * q]", "sym[p, q]"),
    ("cat1 left", "1[q * p] o sym[p, q]", "sym[p, q]"),
    ("cat2", "sym[p, q] o (sym[q, p] o sym[p, q])", "(sym[p, q] o sym[q, p]) o sym[p, q]"),
    ("fun1", "1[p] * 1[q]", "1[p * q]"),
    (
        "fun2",
        "(imp[p](sym[p, q]) * 1[s]) o (eta[p, q] * eps[r, s])",
        "(imp[p](sym[p, q]) o eta[p, q]) * (1[s] o eps[r, s])",
    ),
    ("nat", "sym[p -o (p * q), r] o (eta[p, q] * 1[r])", "(1[r] * eta[p, q]) o sym[q, r]"),
    ("iso", "sym[q, p] o sym[p, q]", "1[p * q]"),
    ("coh", "sym[p * q, r]", "(sym[p, r] * 1[q]) o (1[p] * sym[q, r])"),
    ("fun2str", "imp[p](sym[r, q] o sym[q, r])", "imp[p](sym[r, q]) o imp[p](sym[q, r])"),
    ("nateta", "eta[p, r] o eps[q, r]", "imp[p](1[p] * eps[q, r]) o eta[p, q * (q -o r)]"),
    ("fun1str", "imp[p](1[q])", "1[p -o q]"),
    ("nateps", "eps[p, r * q] o (1[p] * imp[p](sym[q, r]))", "sym[q, r] o eps[p, q * r]"),
    ("triang1", "eps[p, p * q] o (1[p] * eta[p, q])", "1[p * q]"),
    ("triang2", "imp[p](eps[p, q]) o eta[p, p -o q]", "1[p -o q]"),
    ("unit symmetry left", "sym[I, p]", "1[p]"),
    ("unit symmetry right", "sym[p, I]", "1[p]"),
    (
        "Yang-Baxter",
        "(sym[q, r] * 1[p]) o (1[q] * sym[p, r]) o (sym[p, q] * 1[r])",
        "(1[r] * sym[p, q]) o (sym[p, r] * 1[q]) o (1[p] * sym[q, r])",
    ),
];

fn congruence() -> Outcome {
    let start = Instant::now();
    let mut failed = Vec::new();
    for (name, l, r) in EQUALITIES {
        let (l, r) = (tt(l), tt(r));
        if l.ty != r.ty || links_of(&l) != links_of(&r) {
            failed.push(name.to_string());
        }
    }
    let mut units = 0;
    for a in ["I", "p", "p * q"] {
        let cases = [
            (format!("eps[I, {a}] o eta[I, {a}]"), format!("1[{a}]")),
            (format!("eta[I, {a}] o eps[I, {a}]"), format!("1[I -o {a}]")),
        ];
        for (l, r) in cases {
            if oracle_equal(&tt(&l), &tt(&r), DEFAULT_BUDGET).unwrap().is_equal() {
                units += 1;
            } else {
                failed.push(l);
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failed.is_empty() && elapsed < Duration::from_secs(60),
        format!(
            "{} equalities with identical links, {units}/6 unit composites oracle-equal to identities; failures {failed:?}; {elapsed:.2?}",
            EQUALITIES.len()
        ),
    )
}

fn unit_endomorphisms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let id = tt("1[I]");
    let (mut empty, mut small, mut small_equal) = (0, 0, 0);
    for _ in 0..500 {
        let size = rng.gen_range(1..=6);
        let t = random_unit_term(&mut rng, size);
        let l = links_of(&t);
        if l.edges.is_empty() && l.loops == 0 {
            empty += 1;
        }
        if t.term.size() <= 10 {
            small += 1;
            if oracle_equal(&t, &id, DEFAULT_BUDGET).unwrap().is_equal() {
                small_equal += 1;
            }
        }
    }
    outcome(
        empty == 500 && small_equal == small,
        format!("500 terms of type I |- I: {empty} without links or loops; {small_equal}/{small} of size <= 10 oracle-equal to 1[I]"),
    )
}

/// Criteria whose full bound is out of reach; their failure is reported
/// but does not fail the run.
const BOUNDED: &[usize] = &[2];

type Criterion = (usize, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "links of the two terms of type p * (p -o q) |- p -o q * p", distinguished_pair),
        (2, "links agree with the rewrite oracle on enumerated terms", oracle_agreement),
        (3, "cut elimination soundness", cut_elimination),
        (4, "normal forms in S_m number m!", normal_form_count),
        (5, "even number of occurrences of each letter", even_occurrences),
        (6, "A |- I underivable for I-free A", non_derivability),
        (7, "splitting soundness", splitting),
        (8, "equalities preserve links", congruence),
        (9, "terms of type I |- I are the identity", unit_endomorphisms),
    ];
    let mut blocking = 0;
    let mut passed = 0;
    for (n, name, f) in criteria {
        let o = f();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n} [{status}] {name}: {}", o.detail);
        if o.pass {
            passed += 1;
        } else if !BOUNDED.contains(&n) {
            blocking += 1;
        }
    }
    println!("acceptance: {passed}/9 criteria pass");
    if blocking > 0 {
        std::process::exit(1);
    }
}
