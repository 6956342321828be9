//! Central terms as permutations, and their normal forms.
use lincoh::central::{central_equal, perm_normal_form, perm_of, Perm};
use lincoh::terms::TypedTerm;

fn main() {
    let left = TypedTerm::parse("(sym[q, r] * 1[p]) o (1[q] * sym[p, r]) o (sym[p, q] * 1[r])").unwrap();
    let right = TypedTerm::parse("(1[r] * sym[p, q]) o (sym[p, r] * 1[q]) o (1[p] * sym[q, r])").unwrap();
    let p = perm_of(&left).unwrap();
    println!("permutation: {p}");
    println!("normal form: {}", perm_normal_form(&p));
    println!("Yang-Baxter holds: {}", central_equal(&left, &right).unwrap());

    for w in Perm::all(3) {
        println!("{w}  {}", perm_normal_form(&w));
    }
}
