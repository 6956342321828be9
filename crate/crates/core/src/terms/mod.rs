//! Proof terms, their typing, the congruence as a rewriting oracle, and
//! invertible terms for constant and proper formulas.

mod iso;
mod node;
mod oracle;
mod rewrite;
mod term;

pub use iso::{eta_eps_i_inverse, iso_const, strip_const, IsoError};
pub use node::{Kind, N};
pub use oracle::{oracle_equal, search, OracleError, Verdict, DEFAULT_BUDGET};
pub use rewrite::{neighbors, rewrite_neighbors};
pub use term::{
    comp, comp_chain, imp_alpha, parse_term, smart_comp, smart_imp, smart_tensor, tensor_all, type_of, Term,
    TermError, TypeError, TypedTerm,
};
