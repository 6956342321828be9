pub mod calculus_il;
pub mod calculus_s;
pub mod central;
pub mod cli;
mod deriv_text;
pub mod gen;
pub mod links;
pub mod syntax;
pub mod terms;
