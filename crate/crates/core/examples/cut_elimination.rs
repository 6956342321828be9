//! Eliminate cuts from a random IL derivation and check that the links survive.
use lincoh::calculus_il::{check_derivation_il, clean, code, eliminate_cuts};
use lincoh::gen::random_derivation_il;
use lincoh::links::links_of;
use lincoh::syntax::Letter;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let letters: Vec<Letter> = ["p", "q", "r"].iter().map(|s| Letter::new(s)).collect();
    let d = random_derivation_il(&mut rng, &letters, 3, 4);
    println!("conclusion: {}", check_derivation_il(&d).unwrap());
    println!("before: size {}, cuts {}", d.size(), d.cut_count());

    let e = clean(&eliminate_cuts(&d));
    assert!(e.is_cut_free());
    assert_eq!(check_derivation_il(&e).unwrap(), check_derivation_il(&d).unwrap());
    println!("after:  size {}, cuts {}", e.size(), e.cut_count());

    let same = links_of(&code(&d)) == links_of(&code(&e));
    println!("links preserved: {same}");
}
