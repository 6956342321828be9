use std::fmt;

/// A permutation of `{1..m}` in one-line notation: `images[i - 1]` is the
/// image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(m: usize) -> Perm {
        Perm { images: (1..=m).collect() }
    }

    /// `None` unless `images` is a bijection on `{1..images.len()}`.
    pub fn new(images: Vec<usize>) -> Option<Perm> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i == 0 || i > m || std::mem::replace(&mut seen[i - 1], true) {
                return None;
            }
        }
        Some(Perm { images })
    }

    /// The adjacent transposition `(j, j + 1)` on `m` points.
    pub fn adjacent(m: usize, j: usize) -> Perm {
        assert!(j >= 1 && j < m, "no adjacent transposition s{j} on {m} points");
        let mut p = Perm::identity(m);
        p.images.swap(j - 1, j);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// `self` after `other`: `i` goes to `self(other(i))`.
    pub fn after(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i - 1] = k + 1;
        }
        Perm { images }
    }

    /// Every permutation of `{1..m}`, in lexicographic order.
    pub fn all(m: usize) -> Vec<Perm> {
        fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if prefix.len() == used.len() {
                out.push(Perm { images: prefix.clone() });
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i + 1);
                    go(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; m], &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `s[i,j]` stands for `s_i s_(i-1) ... s_j`, with `i >= j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub i: usize,
    pub j: usize,
}

/// A product `s[i1,j1] ... s[in,jn]` with `i1 < ... < in`; empty for the
/// identity. A word denotes the composite function, rightmost factor
/// applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermNormalForm {
    pub degree: usize,
    pub blocks: Vec<Block>,
}

impl PermNormalForm {
    /// The adjacent transpositions of the word, leftmost first.
    pub fn word(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| (b.j..=b.i).rev()).collect()
    }

    pub fn eval(&self) -> Perm {
        let mut p = Perm::identity(self.degree);
        for s in self.word() {
            p = p.after(&Perm::adjacent(self.degree, s));
        }
        p
    }
}

impl fmt::Display for PermNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.blocks.iter().map(|b| format!("s[{},{}]", b.i, b.j)).collect();
        f.write_str(&parts.join(" "))
    }
}

fn block_perm(m: usize, b: Block) -> Perm {
    PermNormalForm { degree: m, blocks: vec![b] }.eval()
}

/// Peel off blocks from the largest index down: if `w` sends `j` to
/// `k + 1` with `j <= k`, then `w = w' s[k,j]` where `w'` fixes `k + 1`.
pub fn perm_normal_form(p: &Perm) -> PermNormalForm {
    let m = p.degree();
    let mut w = p.clone();
    let mut blocks = Vec::new();
    for k in (1..m).rev() {
        let j = w.inverse().apply(k + 1);
        if j != k + 1 {
            let b = Block { i: k, j };
            w = w.after(&block_perm(m, b).inverse());
            blocks.push(b);
        }
    }
    debug_assert!(w.is_identity());
    blocks.reverse();
    PermNormalForm { degree: m, blocks }
}
