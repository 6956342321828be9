//! Reader for the parenthesized derivation format
//! `(rule param* [sequent] child*)`, shared by both sequent systems.

use crate::syntax::{ParseError, Parser, TokKind};

pub struct RawNode<Seq> {
    pub rule: String,
    pub pos: usize,
    pub params: Vec<usize>,
    pub sequent: Seq,
    pub children: Vec<RawNode<Seq>>,
}

pub fn parse_tree<Seq>(
    text: &str,
    sequent: &dyn Fn(&mut Parser) -> Result<Seq, ParseError>,
) -> Result<RawNode<Seq>, ParseError> {
    let mut p = Parser::new(text)?;
    let node = node(&mut p, sequent)?;
    p.expect_eof()?;
    Ok(node)
}

fn node<Seq>(
    p: &mut Parser,
    sequent: &dyn Fn(&mut Parser) -> Result<Seq, ParseError>,
) -> Result<RawNode<Seq>, ParseError> {
    p.expect(&TokKind::LParen, "'('")?;
    let pos = p.pos();
    let rule = match p.bump() {
        TokKind::Ident(name) => name,
        other => return Err(ParseError::new(pos, format!("expected a rule name, found {}", crate::syntax::describe(&other)))),
    };
    let mut params = Vec::new();
    while let TokKind::Number(n) = p.peek() {
        params.push(*n);
        p.bump();
    }
    p.expect(&TokKind::LBrack, "'['")?;
    let seq = sequent(p)?;
    p.expect(&TokKind::RBrack, "']'")?;
    let mut children = Vec::new();
    while *p.peek() == TokKind::LParen {
        children.push(node(p, sequent)?);
    }
    p.expect(&TokKind::RParen, "')'")?;
    Ok(RawNode { rule, pos, params, sequent: seq, children })
}

/// Write `(rule params [sequent]` followed by indented children and `)`.
pub fn write_node<N>(
    out: &mut String,
    depth: usize,
    head: &str,
    children: &[N],
    child: &dyn Fn(&mut String, usize, &N),
) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    out.push('(');
    out.push_str(head);
    for c in children {
        out.push('\n');
        child(out, depth + 1, c);
    }
    out.push(')');
}
