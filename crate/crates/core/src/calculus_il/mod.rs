mod cut;
mod derivation;

pub use cut::{antecedent_rank, clean, consequent_rank, cut_measure, eliminate_cuts, CutMeasure};
pub use derivation::{check_derivation_il, code, decode, derivable_il, from_s, DerivationIL, RuleIL};
