//! Decide equalities by bounded search over the rewrite rules.
use lincoh::terms::{oracle_equal, TypedTerm, DEFAULT_BUDGET};

fn main() {
    let cases = [
        ("imp[p](eps[p, q]) o eta[p, p -o q]", "1[p -o q]"),
        ("sym[p, q] o sym[q, p]", "1[q * p]"),
        ("sym[p, q]", "1[p * q]"),
    ];
    for (a, b) in cases {
        let f = TypedTerm::parse(a).unwrap();
        let g = TypedTerm::parse(b).unwrap();
        match oracle_equal(&f, &g, DEFAULT_BUDGET) {
            Ok(v) => println!("{a}  =?  {b}: {v:?}"),
            Err(e) => println!("{a}  =?  {b}: {e}"),
        }
    }
}
