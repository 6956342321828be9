//! The multi-antecedent sequent system: derivations, cut-free search,
//! constant-formula lemmas and derivation splitting.

mod const_proper;
mod derivation;
mod search;
mod split;

pub use const_proper::{check_const_proper, ConstCase, ConstProperError, ConstTrace};
pub use derivation::{check_derivation_s, DerivationS, ReadError, RuleError, RuleS};
pub use search::{const_iso_s, derivable_s, NotConstant};
pub use split::{split_imp, split_tensor, split_weak, SplitError};
