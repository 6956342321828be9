//! Formulas, α-formulas, sequents, their text syntax, and signed
//! occurrence addressing.

mod formula;
mod occurrence;
mod parse;
mod sequent;

pub use formula::{AlphaFormula, Formula, Letter, Prime};
pub use occurrence::{is_balanced, letters_even, leaf_steps, signed_occurrences, BadPath, OccPath, Occurrence, Side, Sign, Step};
pub use parse::{describe, parse_formula, parse_sequent_il, parse_sequent_s, tokenize, ParseError, Parser, TokKind, Token};
pub use sequent::{SequentIL, SequentS};

/// Parse a formula and flatten it to an α-formula.
pub fn parse_alpha(text: &str) -> Result<AlphaFormula, ParseError> {
    parse_formula(text).map(|f| f.alpha())
}

pub fn alpha_normalize(f: &Formula) -> AlphaFormula {
    f.alpha()
}

pub fn tensor_alpha(a: &AlphaFormula, b: &AlphaFormula) -> AlphaFormula {
    a.tensor(b)
}
