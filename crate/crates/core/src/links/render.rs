use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{LinkError, LinkSet};
use crate::syntax::{parse_sequent_il, signed_occurrences, OccPath, ParseError, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Dot,
    Tikz,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("unknown format `{0}` (expected dot, tikz or json)")]
    UnknownFormat(String),
    #[error("malformed link set: {0}")]
    Json(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Links(#[from] LinkError),
}

impl FromStr for RenderFormat {
    type Err = RenderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(RenderFormat::Dot),
            "tikz" => Ok(RenderFormat::Tikz),
            "json" => Ok(RenderFormat::Json),
            other => Err(RenderError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    #[serde(rename = "type")]
    ty: String,
    edges: Vec<[String; 2]>,
    loops: usize,
}

impl LinkSet {
    pub fn to_json(&self) -> String {
        let w = Wire {
            ty: self.ty.to_string(),
            edges: self.edges.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            loops: self.loops,
        };
        serde_json::to_string(&w).expect("serializable")
    }

    /// Parse and validate the JSON form.
    pub fn from_json(text: &str) -> Result<LinkSet, RenderError> {
        let w: Wire = serde_json::from_str(text).map_err(|e| RenderError::Json(e.to_string()))?;
        let ty = parse_sequent_il(&w.ty)?;
        let mut edges = Vec::new();
        for [a, b] in &w.edges {
            let pa: OccPath = a.parse().map_err(|e: crate::syntax::BadPath| RenderError::Json(e.to_string()))?;
            let pb: OccPath = b.parse().map_err(|e: crate::syntax::BadPath| RenderError::Json(e.to_string()))?;
            edges.push((pa, pb));
        }
        let l = LinkSet::new(ty, edges, w.loops);
        l.validate()?;
        Ok(l)
    }
}

type Row = Vec<(OccPath, String)>;

/// Node identifiers and labels for each occurrence, split by side.
fn nodes(l: &LinkSet) -> (Row, Row) {
    let mut ant = Vec::new();
    let mut con = Vec::new();
    for o in signed_occurrences(&l.ty) {
        let label = format!("{}@{}", o.letter, o.path);
        match o.path.side {
            Side::Ant => ant.push((o.path, label)),
            Side::Con => con.push((o.path, label)),
        }
    }
    (ant, con)
}

fn node_id(ant: &[(OccPath, String)], con: &[(OccPath, String)], p: &OccPath) -> String {
    match p.side {
        Side::Ant => format!("a{}", ant.iter().position(|(q, _)| q == p).unwrap()),
        Side::Con => format!("c{}", con.iter().position(|(q, _)| q == p).unwrap()),
    }
}

pub fn render(l: &LinkSet, format: RenderFormat) -> String {
    match format {
        RenderFormat::Json => l.to_json(),
        RenderFormat::Dot => dot(l),
        RenderFormat::Tikz => tikz(l),
    }
}

fn dot(l: &LinkSet) -> String {
    let (ant, con) = nodes(l);
    let mut s = String::new();
    writeln!(s, "graph links {{").unwrap();
    writeln!(s, "  label=\"{}\";", l.ty).unwrap();
    writeln!(s, "  node [shape=plaintext];").unwrap();
    for (prefix, row) in [("a", &ant), ("c", &con)] {
        if row.is_empty() {
            continue;
        }
        write!(s, "  {{ rank=same;").unwrap();
        for (i, (_, label)) in row.iter().enumerate() {
            write!(s, " {prefix}{i} [label=\"{label}\"];").unwrap();
        }
        writeln!(s, " }}").unwrap();
    }
    if !ant.is_empty() && !con.is_empty() {
        writeln!(s, "  a0 -- c0 [style=invis];").unwrap();
    }
    for (a, b) in &l.edges {
        writeln!(s, "  {} -- {};", node_id(&ant, &con, a), node_id(&ant, &con, b)).unwrap();
    }
    if l.loops > 0 {
        writeln!(s, "  // loops: {}", l.loops).unwrap();
    }
    writeln!(s, "}}").unwrap();
    s
}

fn tikz(l: &LinkSet) -> String {
    let (ant, con) = nodes(l);
    let mut s = String::new();
    writeln!(s, "\\begin{{tikzpicture}}").unwrap();
    for (prefix, row, y) in [("a", &ant, 2), ("c", &con, 0)] {
        for (i, (_, label)) in row.iter().enumerate() {
            writeln!(s, "  \\node ({prefix}{i}) at ({i},{y}) {{${}$}};", label.replace('@', "^{") + "}").unwrap();
        }
    }
    for (a, b) in &l.edges {
        let (x, y) = (node_id(&ant, &con, a), node_id(&ant, &con, b));
        let bend = match (a.side, b.side) {
            (Side::Ant, Side::Ant) => " to[bend right]",
            (Side::Con, Side::Con) => " to[bend left]",
            _ => " --",
        };
        writeln!(s, "  \\draw ({x}){bend} ({y});").unwrap();
    }
    writeln!(s, "\\end{{tikzpicture}}").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::links::links_of;
    use crate::terms::TypedTerm;

    fn links(s: &str) -> LinkSet {
        links_of(&TypedTerm::parse(s).unwrap())
    }

    #[test]
    fn identity_json() {
        let l = links("1[p]");
        assert_eq!(render(&l, RenderFormat::Json), r#"{"type":"p |- p","edges":[["ant.1","con.1"]],"loops":0}"#);
        assert_eq!(LinkSet::from_json(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn empty_documents() {
        let l = links("1[I]");
        assert_eq!(render(&l, RenderFormat::Json), r#"{"type":"I |- I","edges":[],"loops":0}"#);
        assert!(!render(&l, RenderFormat::Dot).contains("--"));
    }

    #[test]
    fn dot_has_two_rows() {
        let l = links("imp[p](eps[p, q] * 1[p]) o eta[p, (p -o q) * p] o sym[p, p -o q]");
        let d = render(&l, RenderFormat::Dot);
        assert_eq!(d.matches("rank=same").count(), 2);
        assert_eq!(d.matches(" -- ").count(), 4);
        assert!(d.contains("p@ant.1"));
    }

    #[test]
    fn unknown_format() {
        assert_eq!("svg".parse::<RenderFormat>(), Err(RenderError::UnknownFormat("svg".into())));
    }

    #[test]
    fn invalid_json_rejected() {
        assert!(LinkSet::from_json(r#"{"type":"p |- q","edges":[["ant.1","con.1"]],"loops":0}"#).is_err());
        assert!(LinkSet::from_json("[]").is_err());
    }
}
