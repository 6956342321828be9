//! Semi-decision of term equality by bidirectional search in the rewrite
//! graph. A verdict of `Equal` is a proof; `Unknown` proves nothing unless
//! the search ran out of terms to explore.

use std::cmp::Reverse;
use std::collections::hash_map::Entry;
use std::collections::{BinaryHeap, HashMap};

use thiserror::Error;

use super::node::N;
use super::rewrite::neighbors;
use super::term::TypedTerm;
use crate::syntax::SequentIL;

pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Joined by a rewrite path with this many steps (canonicalization is free).
    Equal { distance: usize },
    /// No path found. `exhausted` means one side's component was explored
    /// completely, so the terms are in fact unequal.
    Unknown { exhausted: bool },
}

impl Verdict {
    pub fn is_equal(self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("terms have different types: `{0}` and `{1}`")]
pub struct OracleError(pub SequentIL, pub SequentIL);

struct Side {
    dist: HashMap<N, usize>,
    heap: BinaryHeap<Reverse<(usize, usize)>>,
    nodes: Vec<N>,
}

impl Side {
    fn new(start: N) -> Side {
        let mut dist = HashMap::new();
        dist.insert(start.clone(), 0);
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((start.size, 0)));
        Side { dist, heap, nodes: vec![start] }
    }
}

/// Search outward from both terms, always expanding the smallest
/// unexpanded term of the side whose turn it is. `budget` bounds the
/// number of distinct terms discovered on each side.
pub fn oracle_equal(f: &TypedTerm, g: &TypedTerm, budget: usize) -> Result<Verdict, OracleError> {
    if f.ty != g.ty {
        return Err(OracleError(f.ty.clone(), g.ty.clone()));
    }
    Ok(search(N::from_term(&f.term), N::from_term(&g.term), budget))
}

pub fn search(a: N, b: N, budget: usize) -> Verdict {
    if a == b {
        return Verdict::Equal { distance: 0 };
    }
    let mut sides = [Side::new(a), Side::new(b)];
    let mut turn = 0;
    loop {
        let (this, other) = if turn == 0 {
            let (x, y) = sides.split_at_mut(1);
            (&mut x[0], &y[0])
        } else {
            let (x, y) = sides.split_at_mut(1);
            (&mut y[0], &x[0])
        };
        let Some(Reverse((_, idx))) = this.heap.pop() else {
            return Verdict::Unknown { exhausted: true };
        };
        let n = this.nodes[idx].clone();
        let d = this.dist[&n];
        for m in neighbors(&n) {
            if let Some(e) = other.dist.get(&m) {
                return Verdict::Equal { distance: d + 1 + e };
            }
            if this.nodes.len() >= budget {
                return Verdict::Unknown { exhausted: false };
            }
            if let Entry::Vacant(v) = this.dist.entry(m.clone()) {
                v.insert(d + 1);
                this.heap.push(Reverse((m.size, this.nodes.len())));
                this.nodes.push(m);
            }
        }
        turn = 1 - turn;
    }
}
