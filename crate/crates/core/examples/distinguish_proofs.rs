//! Two terms of the same type that their links tell apart.
use lincoh::links::{eq_terms, generalize, links_of};
use lincoh::terms::TypedTerm;

fn main() {
    let f = TypedTerm::parse(
        "imp[p]((eps[p, q] * 1[p]) o (1[p] * sym[p, p -o q]) o (sym[p, p] * 1[p -o q])) o eta[p, p * (p -o q)]",
    )
    .unwrap();
    let g = TypedTerm::parse("imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]").unwrap();
    println!("f, g : {}", f.ty);
    for (name, t) in [("f", &f), ("g", &g)] {
        let (gen, _) = generalize(t);
        println!("{name}: {}\n   most general type {}", links_of(t), gen.ty);
    }
    println!("verdict: {:?}", eq_terms(&f, &g));
}
