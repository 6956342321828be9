//! Proof search in both calculi, then checking the found derivations.
use lincoh::calculus_il::{check_derivation_il, derivable_il};
use lincoh::calculus_s::{check_derivation_s, derivable_s};
use lincoh::syntax::{parse_sequent_il, parse_sequent_s};

fn main() {
    for src in ["p, p -o q |- q", "p -o q, q -o r |- p -o r", "(p -o I) -o I |- p"] {
        let s = parse_sequent_s(src).unwrap();
        match derivable_s(&s) {
            Some(d) => {
                check_derivation_s(&d).unwrap();
                println!("S   {src}\n{}", d.to_text());
            }
            None => println!("S   {src}: not derivable"),
        }
    }

    let s = parse_sequent_il("p * (q -o r) |- q -o (r * p)").unwrap();
    let d = derivable_il(&s).expect("derivable");
    assert_eq!(check_derivation_il(&d).unwrap(), s);
    println!("IL  {s}\n{}", d.to_text());
}
