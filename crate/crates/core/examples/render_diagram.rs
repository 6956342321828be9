//! Render the links of a term as Graphviz, TikZ or JSON.
use lincoh::links::{links_of, render, RenderFormat};
use lincoh::terms::TypedTerm;

fn main() {
    let t = TypedTerm::parse("imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]").unwrap();
    let l = links_of(&t);
    for fmt in [RenderFormat::Dot, RenderFormat::Tikz, RenderFormat::Json] {
        println!("{}", render(&l, fmt));
    }
}
