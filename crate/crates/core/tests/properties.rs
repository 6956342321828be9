use lincoh::calculus_il::{check_derivation_il, clean, code, decode, eliminate_cuts};
use lincoh::central::{perm_normal_form, Perm};
use lincoh::gen::{random_alpha, random_derivation_il, random_term, random_term_from, TermShape};
use lincoh::links::{diversify_type, generalize, links_of};
use lincoh::syntax::{is_balanced, signed_occurrences, Letter};
use lincoh::terms::{comp, rewrite_neighbors, strip_const, Term, TypedTerm};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn term(seed: u64, size: usize) -> TypedTerm {
    random_term(&mut rng(seed), &TermShape::new(&["p", "q"], size))
}

fn letters() -> Vec<Letter> {
    ["p", "q", "r"].iter().map(|l| Letter::new(l)).collect()
}

fn typed(t: Term) -> TypedTerm {
    TypedTerm::new(t).expect("well typed")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn links_are_a_perfect_matching(seed: u64, size in 1usize..12) {
        let t = term(seed, size);
        let l = links_of(&t);
        prop_assert!(l.validate().is_ok());
        prop_assert_eq!(2 * l.edges.len(), signed_occurrences(&t.ty).len());
    }

    #[test]
    fn rewriting_preserves_links(seed: u64, size in 1usize..8) {
        let t = term(seed, size);
        let l = links_of(&t);
        for n in rewrite_neighbors(&t).into_iter().take(40) {
            prop_assert_eq!(&n.ty, &t.ty);
            prop_assert_eq!(&links_of(&n), &l, "{} -> {}", t.term, n.term);
        }
    }

    #[test]
    fn gluing_is_functorial(seed: u64, size in 1usize..6) {
        let mut r = rng(seed);
        let shape = TermShape::new(&["p", "q"], size);
        let f = random_term(&mut r, &shape);
        let g = typed(random_term_from(&mut r, &f.ty.con, &shape));
        let h = typed(random_term_from(&mut r, &g.ty.con, &shape));
        let left = typed(comp(comp(h.term.clone(), g.term.clone()), f.term.clone()));
        let right = typed(comp(h.term.clone(), comp(g.term.clone(), f.term.clone())));
        prop_assert_eq!(links_of(&left), links_of(&right));
        let id = typed(comp(Term::id(f.ty.con.clone()), f.term.clone()));
        prop_assert_eq!(links_of(&id), links_of(&f));
    }

    #[test]
    fn cut_elimination_preserves_links(seed: u64, cuts in 1usize..4) {
        let d = random_derivation_il(&mut rng(seed), &letters(), cuts, 3);
        let e = clean(&eliminate_cuts(&d));
        prop_assert!(e.is_cut_free());
        prop_assert_eq!(check_derivation_il(&e).unwrap(), check_derivation_il(&d).unwrap());
        prop_assert_eq!(links_of(&code(&e)), links_of(&code(&d)));
    }

    #[test]
    fn decoding_preserves_links(seed: u64, size in 1usize..10) {
        let t = term(seed, size);
        let d = decode(&t);
        prop_assert_eq!(check_derivation_il(&d).unwrap(), t.ty.clone());
        prop_assert_eq!(links_of(&code(&d)), links_of(&t));
    }

    #[test]
    fn generalization_is_balanced(seed: u64, size in 1usize..10) {
        let t = term(seed, size);
        let ty = diversify_type(&t);
        prop_assert!(is_balanced(&ty));
        let (g, sub) = generalize(&t);
        prop_assert_eq!(sub.apply_term(&g.term), t.term);
    }

    #[test]
    fn perm_normal_form_is_canonical(images in Just((1..=6).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Perm::new(images).unwrap();
        let nf = perm_normal_form(&p);
        prop_assert_eq!(nf.eval(), p.clone());
        prop_assert_eq!(perm_normal_form(&nf.eval()), nf);
    }

    #[test]
    fn strip_composites_have_identity_links(seed: u64) {
        let a = random_alpha(&mut rng(seed), &letters()[..2], 2);
        prop_assume!(a.is_proper() && !a.is_constant() && a.connectives() <= 3);
        let (_, u, v) = strip_const(&a).unwrap();
        let round = typed(comp(v, u));
        prop_assert_eq!(&round.ty.ant, &a);
        prop_assert_eq!(links_of(&round), links_of(&typed(Term::id(a.clone()))));
    }
}

#[test]
fn every_permutation_of_five_round_trips() {
    for p in Perm::all(5) {
        assert_eq!(perm_normal_form(&p).eval(), p);
    }
}
