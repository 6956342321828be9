//! Parse formulas and sequents, alpha-normalize them and list signed occurrences.
use lincoh::syntax::{alpha_normalize, parse_formula, parse_sequent_il, signed_occurrences, is_balanced};

fn main() {
    let f = parse_formula("(p * I) -o (q * (r -o I))").unwrap();
    println!("formula:    {f}");
    println!("normalized: {}", alpha_normalize(&f));

    let s = parse_sequent_il("p * (p -o q) |- q").unwrap();
    println!("sequent:    {s}  balanced: {}", is_balanced(&s));
    for o in signed_occurrences(&s) {
        println!("  {} {}{}", o.path, o.letter, o.sign);
    }

    match parse_sequent_il("p * |- q") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
}
