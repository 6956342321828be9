//! One-step rewriting with the defining equations of the congruence, in
//! both directions and at every position, over canonical nodes.
//!
//! Equations absorbed by canonicalization (unit laws of composition,
//! associativity, `1 * 1 = 1`, `imp[A](1) = 1`, `sym` with a unit side)
//! have no explicit rule. The mirrored hexagon for `sym[A, B * C]` is
//! included as a derived rule.

use std::collections::HashSet;

use super::node::{Kind, N};
use super::term::TypedTerm;
use crate::syntax::{AlphaFormula, Prime};

/// All terms one rewrite step away from `t`, each with the same type. The
/// canonical form of `t` comes first when it differs from `t`.
pub fn rewrite_neighbors(t: &TypedTerm) -> Vec<TypedTerm> {
    let n = N::from_term(&t.term);
    let canonical = n.to_term();
    let mut out = Vec::new();
    if canonical != t.term {
        out.push(TypedTerm { term: canonical, ty: t.ty.clone() });
    }
    out.extend(neighbors(&n).into_iter().map(|m| TypedTerm { term: m.to_term(), ty: t.ty.clone() }));
    out
}

/// Distinct one-step rewrites of a canonical node, in generation order.
pub fn neighbors(n: &N) -> Vec<N> {
    let mut out = Vec::new();
    rewrites(n, false, &mut out);
    let mut seen = HashSet::new();
    out.retain(|m| m != n && seen.insert(m.clone()));
    out
}

fn rewrites(n: &N, in_chain: bool, out: &mut Vec<N>) {
    local(n, in_chain, out);
    match &n.kind {
        Kind::Chain(xs) => {
            for (i, x) in xs.iter().enumerate() {
                let mut sub = Vec::new();
                rewrites(x, true, &mut sub);
                for r in sub {
                    let mut ys = xs.clone();
                    ys[i] = r;
                    out.push(N::chain(&n.dom, ys));
                }
            }
        }
        Kind::Tensor(xs) => {
            for (i, x) in xs.iter().enumerate() {
                let mut sub = Vec::new();
                rewrites(x, false, &mut sub);
                for r in sub {
                    let mut ys = xs.clone();
                    ys[i] = r;
                    out.push(N::tensor(ys));
                }
            }
        }
        Kind::Imp(a, x) => {
            let mut sub = Vec::new();
            rewrites(x, false, &mut sub);
            for r in sub {
                out.push(N::imp(a.clone(), r));
            }
        }
        _ => {}
    }
}

fn local(n: &N, in_chain: bool, out: &mut Vec<N>) {
    match &n.kind {
        Kind::Id => out.extend(units(&n.dom)),
        Kind::Chain(xs) => {
            for i in 0..xs.len() - 1 {
                for rep in pair(&xs[i], &xs[i + 1]) {
                    let mut ys = xs[..i].to_vec();
                    ys.extend(rep);
                    ys.extend(xs[i + 2..].iter().cloned());
                    out.push(N::chain(&n.dom, ys));
                }
            }
            for i in 0..=xs.len() {
                let ty = if i == 0 { &n.dom } else { &xs[i - 1].cod };
                for u in units(ty) {
                    let mut ys = xs[..i].to_vec();
                    ys.push(u);
                    ys.extend(xs[i..].iter().cloned());
                    out.push(N::chain(&n.dom, ys));
                }
            }
        }
        Kind::Sym(a, c) => {
            // sym[A * B, C] = (sym[A, C] * 1[B]) o (1[A] * sym[B, C])
            for m in 1..a.len() {
                let (x, y) = (a.slice(0..m), a.slice(m..a.len()));
                out.push(N::chain(
                    &n.dom,
                    [
                        N::tensor([N::id(x.clone()), N::sym(y.clone(), c.clone())]),
                        N::tensor([N::sym(x, c.clone()), N::id(y)]),
                    ],
                ));
            }
            // sym[A, B * C] = (1[B] * sym[A, C]) o (sym[A, B] * 1[C])
            for m in 1..c.len() {
                let (x, y) = (c.slice(0..m), c.slice(m..c.len()));
                out.push(N::chain(
                    &n.dom,
                    [
                        N::tensor([N::sym(a.clone(), x.clone()), N::id(y.clone())]),
                        N::tensor([N::id(x), N::sym(a.clone(), y)]),
                    ],
                ));
            }
        }
        Kind::Imp(a, body) => {
            if let Kind::Chain(cs) = &body.kind {
                for s in 1..cs.len() {
                    let first = N::chain(&body.dom, cs[..s].iter().cloned());
                    let second = N::chain(&first.cod, cs[s..].iter().cloned());
                    out.push(N::chain(&n.dom, [N::imp(a.clone(), first), N::imp(a.clone(), second)]));
                }
            }
        }
        Kind::Tensor(xs) => slides(n, xs, out),
        _ => {}
    }
    if !in_chain && !n.is_id() && !matches!(n.kind, Kind::Chain(_)) {
        for u in units(&n.dom) {
            out.push(N::chain(&n.dom, [u, n.clone()]));
        }
        for u in units(&n.cod) {
            out.push(N::chain(&n.dom, [n.clone(), u]));
        }
    }
}

/// Terms equal to `1[Y]` by the symmetry inverse law or a triangle law,
/// placed on a contiguous range of the factors of `Y`.
fn units(y: &AlphaFormula) -> Vec<N> {
    let n = y.len();
    let mut out = Vec::new();
    if n == 0 {
        let i = AlphaFormula::unit();
        out.push(N::chain(&i, [N::eta(i.clone(), i.clone()), N::eps(i.clone(), i.clone())]));
        return out;
    }
    for i in 0..n {
        for j in i + 1..=n {
            let pre = N::id(y.slice(0..i));
            let post = N::id(y.slice(j..n));
            let mid = y.slice(i..j);
            let wrap = |x: N| N::tensor([pre.clone(), x, post.clone()]);
            for m in i + 1..j {
                let (a, b) = (y.slice(i..m), y.slice(m..j));
                out.push(wrap(N::chain(&mid, [N::sym(a.clone(), b.clone()), N::sym(b, a)])));
            }
            for m in i..=j {
                let (a, b) = (y.slice(i..m), y.slice(m..j));
                let ab = a.tensor(&b);
                out.push(wrap(N::chain(
                    &mid,
                    [N::tensor([N::id(a.clone()), N::eta(a.clone(), b)]), N::eps(a, ab)],
                )));
            }
            if j == i + 1 {
                if let Prime::Imp(a, b) = &y.factors()[i] {
                    out.push(wrap(N::chain(
                        &mid,
                        [N::eta(a.clone(), mid.clone()), N::imp(a.clone(), N::eps(a.clone(), b.clone()))],
                    )));
                }
            }
        }
    }
    out
}

/// Splits of a tensor into two layers: one factor is cut inside its own
/// composition chain and the remaining factors move wholly to one layer.
fn slides(n: &N, xs: &[N], out: &mut Vec<N>) {
    for (i, x) in xs.iter().enumerate() {
        let single = [x.clone()];
        let cs: &[N] = match &x.kind {
            Kind::Chain(cs) => cs,
            _ => &single,
        };
        for s in 0..=cs.len() {
            let before_i = N::chain(&x.dom, cs[..s].iter().cloned());
            let after_i = N::chain(&before_i.cod, cs[s..].iter().cloned());
            for others_first in [true, false] {
                let mut before = Vec::new();
                let mut after = Vec::new();
                for (j, y) in xs.iter().enumerate() {
                    if j == i {
                        before.push(before_i.clone());
                        after.push(after_i.clone());
                    } else if others_first {
                        before.push(y.clone());
                        after.push(N::id(y.cod.clone()));
                    } else {
                        before.push(N::id(y.dom.clone()));
                        after.push(y.clone());
                    }
                }
                out.push(N::chain(&n.dom, [N::tensor(before), N::tensor(after)]));
            }
        }
    }
}

fn widths(xs: &[N], cod: bool) -> Vec<usize> {
    xs.iter().map(|x| if cod { x.cod.len() } else { x.dom.len() }).collect()
}

/// Indices `t` with the first `t` widths summing to `w`, excluding the ends.
fn cuts_at(ws: &[usize], w: usize) -> Vec<usize> {
    let mut acc = 0;
    let mut out = Vec::new();
    for (t, x) in ws.iter().enumerate() {
        if t > 0 && acc == w {
            out.push(t);
        }
        acc += x;
    }
    out
}

/// If `x` is `1[A] * F`, return `F`.
fn strip_id_prefix(x: &N, a: &AlphaFormula) -> Option<N> {
    if a.is_unit() {
        return Some(x.clone());
    }
    let ex = x.exploded();
    let k = a.len();
    if ex.len() < k || !ex[..k].iter().all(N::is_id) {
        return None;
    }
    if AlphaFormula::concat(ex[..k].iter().map(|e| &e.dom)) != *a {
        return None;
    }
    Some(N::tensor(ex[k..].iter().cloned()))
}

/// Replacements for the adjacent composable pair `g o f`.
fn pair(f: &N, g: &N) -> Vec<Vec<N>> {
    let mut out = Vec::new();

    // (g1 * g2) o (f1 * f2) = (g1 o f1) * (g2 o f2), left to right.
    let ef = f.exploded();
    let eg = g.exploded();
    let blocks = align(&ef, &eg);
    if blocks.len() >= 2 {
        let parts = blocks.into_iter().map(|(fb, gb)| {
            let fb = N::tensor(fb);
            let dom = fb.dom.clone();
            N::chain(&dom, [fb, N::tensor(gb)])
        });
        out.push(vec![N::tensor(parts)]);
    }

    match &g.kind {
        // sym o (f1 * f2) = (f2 * f1) o sym
        Kind::Sym(a2, _) => {
            for t in cuts_at(&widths(&ef, true), a2.len()) {
                let f1 = N::tensor(ef[..t].iter().cloned());
                let f2 = N::tensor(ef[t..].iter().cloned());
                out.push(vec![N::sym(f1.dom.clone(), f2.dom.clone()), N::tensor([f2, f1])]);
            }
        }
        Kind::Eta(a, _) => {
            out.push(vec![N::eta(a.clone(), f.dom.clone()), N::imp(a.clone(), N::tensor([N::id(a.clone()), f.clone()]))]);
        }
        Kind::Eps(a, c) => {
            // eps o (1 * imp(f)) = f o eps
            if let Some(rest) = strip_id_prefix(f, a) {
                if let Kind::Imp(a2, body) = &rest.kind {
                    if a2 == a {
                        out.push(vec![N::eps(a.clone(), body.dom.clone()), body.clone()]);
                    }
                }
            }
            // eps[A, A * B] o (1[A] * eta[A, B]) = 1
            if c.len() >= a.len() && c.factors()[..a.len()] == *a.factors() {
                let b = c.slice(a.len()..c.len());
                if *f == N::tensor([N::id(a.clone()), N::eta(a.clone(), b)]) {
                    out.push(vec![]);
                }
            }
        }
        Kind::Tensor(gs) if gs.len() == 2 => {
            // (sym[A, C] * 1[B]) o (1[A] * sym[B, C]) = sym[A * B, C]
            if let (Kind::Sym(a, c), Kind::Id) = (&gs[0].kind, &gs[1].kind) {
                let b = gs[1].dom.clone();
                if *f == N::tensor([N::id(a.clone()), N::sym(b.clone(), c.clone())]) {
                    out.push(vec![N::sym(a.tensor(&b), c.clone())]);
                }
            }
            // (1[B] * sym[A, C]) o (sym[A, B] * 1[C]) = sym[A, B * C]
            if let (Kind::Id, Kind::Sym(a, c)) = (&gs[0].kind, &gs[1].kind) {
                let b = gs[0].dom.clone();
                if *f == N::tensor([N::sym(a.clone(), b.clone()), N::id(c.clone())]) {
                    out.push(vec![N::sym(a.clone(), b.tensor(c))]);
                }
            }
        }
        _ => {}
    }

    match &f.kind {
        Kind::Sym(a, b) => {
            // (g2 * g1) o sym = sym o (g1 * g2)
            for t in cuts_at(&widths(&eg, false), b.len()) {
                let gb = N::tensor(eg[..t].iter().cloned());
                let ga = N::tensor(eg[t..].iter().cloned());
                let (ca, cb) = (ga.cod.clone(), gb.cod.clone());
                out.push(vec![N::tensor([ga, gb]), N::sym(ca, cb)]);
            }
            if let Kind::Sym(b2, a2) = &g.kind {
                if a2 == a && b2 == b {
                    out.push(vec![]);
                }
            }
        }
        Kind::Imp(a, x) => {
            if let Kind::Imp(a2, y) = &g.kind {
                if a == a2 {
                    out.push(vec![N::imp(a.clone(), N::chain(&x.dom, [x.clone(), y.clone()]))]);
                }
            }
        }
        Kind::Eta(a, _) => {
            // (imp[A](1 * h)) o eta = eta o h
            if let Kind::Imp(a2, x) = &g.kind {
                if a2 == a {
                    if let Some(h) = strip_id_prefix(x, a) {
                        let c = h.cod.clone();
                        out.push(vec![h, N::eta(a.clone(), c)]);
                    }
                }
            }
            // imp[A](eps[A, B]) o eta[A, A -o B] = 1
            if let Kind::Eta(_, x) = &f.kind {
                if let [Prime::Imp(a2, b)] = x.factors() {
                    if a2 == a && *g == N::imp(a.clone(), N::eps(a.clone(), b.clone())) {
                        out.push(vec![]);
                    }
                }
            }
        }
        Kind::Eps(a, _) => {
            out.push(vec![N::tensor([N::id(a.clone()), N::imp(a.clone(), g.clone())]), N::eps(a.clone(), g.cod.clone())]);
        }
        _ => {}
    }
    out
}

/// Group the factors of `f` (cod side) and `g` (dom side) into blocks that
/// meet at common boundaries. Zero-width factors join the current block.
fn align(ef: &[N], eg: &[N]) -> Vec<(Vec<N>, Vec<N>)> {
    let (mut i, mut j) = (0, 0);
    let (mut pf, mut pg) = (0usize, 0usize);
    let mut blocks = Vec::new();
    let (mut cf, mut cg) = (Vec::new(), Vec::new());
    while i < ef.len() || j < eg.len() {
        if i < ef.len() && (pf <= pg || j == eg.len()) {
            pf += ef[i].cod.len();
            cf.push(ef[i].clone());
            i += 1;
        } else {
            pg += eg[j].dom.len();
            cg.push(eg[j].clone());
            j += 1;
        }
        let next_f_zero = i < ef.len() && ef[i].cod.is_unit();
        let next_g_zero = j < eg.len() && eg[j].dom.is_unit();
        if pf == pg && !next_f_zero && !next_g_zero && !cf.is_empty() && !cg.is_empty() {
            blocks.push((std::mem::take(&mut cf), std::mem::take(&mut cg)));
        }
    }
    if !cf.is_empty() || !cg.is_empty() {
        match blocks.last_mut() {
            Some(last) if cf.is_empty() || cg.is_empty() => {
                last.0.extend(cf);
                last.1.extend(cg);
            }
            _ => blocks.push((cf, cg)),
        }
    }
    blocks
}
