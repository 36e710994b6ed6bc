use serde::Serialize;

use super::perm::Permutation;
use crate::trees::TieredTree;
use crate::weight::tree_weight;
use crate::{Error, Result};

/// `pi (n+1) = blocks · 1 · right`, with the left part cut after each
/// successive maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub blocks: Vec<Vec<usize>>,
    /// Always ends with `n + 1`.
    pub right: Vec<usize>,
}

impl Decomposition {
    /// Blocks of the left part plus one if the right part holds more than `n + 1`.
    pub fn block_count(&self) -> usize {
        self.blocks.len() + usize::from(self.right.len() > 1)
    }
}

/// Cuts a sequence after its maximum, then after the maximum of what remains, and so on.
pub(crate) fn split_at_maxima(seq: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = seq;
    while !rest.is_empty() {
        let (pos, _) = rest
            .iter()
            .enumerate()
            .max_by_key(|&(_, &a)| a)
            .expect("nonempty");
        out.push(rest[..=pos].to_vec());
        rest = &rest[pos + 1..];
    }
    out
}

pub fn decompose(pi: &Permutation) -> Decomposition {
    let n = pi.len();
    let mut w = pi.word().to_vec();
    w.push(n + 1);
    let one = w.iter().position(|&a| a == 1).unwrap_or(0);
    if n == 0 {
        return Decomposition {
            blocks: Vec::new(),
            right: w,
        };
    }
    Decomposition {
        blocks: split_at_maxima(&w[..one]),
        right: w[one + 1..].to_vec(),
    }
}

/// Builds the component on `labels` (which end in their maximum) and
/// returns its smallest maximum.
fn build(labels: &[usize], tiers: &mut [usize], edges: &mut Vec<[usize; 2]>) -> usize {
    if labels.len() == 1 {
        tiers[labels[0] - 1] = 2;
        return labels[0];
    }
    let (idx, &v0) = labels
        .iter()
        .enumerate()
        .min_by_key(|&(_, &a)| a)
        .expect("nonempty");
    tiers[v0 - 1] = 1;
    let mut parts = split_at_maxima(&labels[..idx]);
    parts.push(labels[idx + 1..].to_vec());
    let mut smallest = usize::MAX;
    for part in parts {
        let s = build(&part, tiers, edges);
        edges.push([v0, s]);
        smallest = smallest.min(s);
    }
    smallest
}

/// The weight-zero maxmin tree on `n + 1` vertices attached to `pi`.
pub fn perm_to_tree(pi: &Permutation) -> TieredTree {
    let n = pi.len();
    let mut w = pi.word().to_vec();
    w.push(n + 1);
    let mut tiers = vec![0; n + 1];
    let mut edges = Vec::with_capacity(n);
    build(&w, &mut tiers, &mut edges);
    if n == 0 {
        tiers[0] = 1;
    }
    TieredTree::new(tiers, edges).expect("construction yields a maxmin tree")
}

fn component(adj: &[u64], start: usize, within: u64) -> u64 {
    crate::weight::flood_mask(adj, start, within)
}

fn unbuild(adj: &[u64], comp: u64, out: &mut Vec<usize>) {
    if comp.count_ones() == 1 {
        out.push(comp.trailing_zeros() as usize + 1);
        return;
    }
    let v0 = comp.trailing_zeros() as usize;
    let top = 63 - comp.leading_zeros() as usize;
    let rest = comp & !(1u64 << v0);
    let mut parts = Vec::new();
    let mut nbrs = adj[v0] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        parts.push(component(adj, u, rest));
    }
    let right_pos = parts
        .iter()
        .position(|&p| p & (1u64 << top) != 0)
        .expect("maximum lies in some component");
    let right = parts.remove(right_pos);
    parts.sort_by_key(|&p| std::cmp::Reverse(63 - p.leading_zeros()));
    for p in parts {
        unbuild(adj, p, out);
    }
    out.push(v0 + 1);
    unbuild(adj, right, out);
}

/// The permutation read off a maxmin tree by the inverse construction,
/// ignoring where each minimum attaches. On weight-zero trees this is the
/// inverse of [`perm_to_tree`].
pub fn underlying_permutation(t: &TieredTree) -> Result<Permutation> {
    if !t.is_maxmin() {
        return Err(Error::domain("expected a maxmin tree"));
    }
    let n = t.n();
    let mut seq = Vec::with_capacity(n);
    unbuild(&t.adjacency(), (1u64 << n) - 1, &mut seq);
    seq.pop();
    Ok(Permutation::from_vec_unchecked(seq))
}

/// Inverse of [`perm_to_tree`].
pub fn tree_to_perm(t: &TieredTree) -> Result<Permutation> {
    if !t.is_maxmin() {
        return Err(Error::domain("tree_to_perm needs a maxmin tree"));
    }
    let w = tree_weight(t);
    if w != 0 {
        return Err(Error::domain(format!("tree_to_perm needs weight 0, got {w}")));
    }
    underlying_permutation(t)
}
