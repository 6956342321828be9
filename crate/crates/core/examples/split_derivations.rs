//! Split cut-free derivations along a partition of their antecedents.
use lincoh::calculus_s::{check_derivation_s, split_imp, split_tensor, split_weak};
use lincoh::gen::{random_split_instance, SplitKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in [SplitKind::Weak, SplitKind::Tensor, SplitKind::Imp] {
        let inst = loop {
            if let Some(i) = random_split_instance(&mut rng, kind) {
                break i;
            }
        };
        let (left, right) = match (&kind, &inst.imp) {
            (SplitKind::Weak, _) => split_weak(&inst.derivation, &inst.gamma, &inst.delta),
            (SplitKind::Tensor, _) => split_tensor(&inst.derivation, &inst.gamma, &inst.delta),
            (SplitKind::Imp, Some((a, b))) => split_imp(&inst.derivation, &inst.gamma, a, b, &inst.delta),
            (SplitKind::Imp, None) => unreachable!(),
        }
        .unwrap();
        println!("{kind:?}: {}", check_derivation_s(&inst.derivation).unwrap());
        println!("  -> {}", check_derivation_s(&left).unwrap());
        println!("  -> {}", check_derivation_s(&right).unwrap());
    }
}
