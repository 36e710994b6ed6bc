//! Tiered trees and their enumeration.
//!
//! Vertices are labelled `1..=n`; tiers are numbered from 1 (the bottom).
//! A tiered tree requires, for every edge `{u, v}` with `u < v`, that
//! `tier(u) < tier(v)`.

mod graph;
mod prufer;
mod tree;

pub use graph::{CompleteTieredGraph, SpanningTrees};
pub use prufer::{count_brute, count_brute_with_limit, for_each_tiering, labeled_trees, CountMode};
pub use tree::{TreeCandidate, TieredTree, Violation, MAX_VERTICES};

use crate::{Error, Result};

/// A composition `(p_1, ..., p_m)` recording how many vertices sit on each tier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TierType(Vec<usize>);

impl TierType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::domain(format!(
                "tier type {parts:?} needs at least two tiers"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::domain(format!("tier type {parts:?} has an empty tier")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of tiers.
    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// All tier functions of this type, as vectors `tiers[v - 1]`, in
    /// lexicographic order.
    pub fn assignments(&self) -> TierAssignments {
        let mut first = Vec::with_capacity(self.n());
        for (k, &c) in self.0.iter().enumerate() {
            first.extend(std::iter::repeat(k + 1).take(c));
        }
        TierAssignments { next: Some(first) }
    }

    /// All compositions of `n` into exactly `m` positive parts, in lexicographic order.
    pub fn compositions(n: usize, m: usize) -> Vec<TierType> {
        fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<TierType>) {
            if slots == 0 {
                if left == 0 {
                    out.push(TierType(cur.clone()));
                }
                return;
            }
            for part in 1..=left.saturating_sub(slots - 1) {
                cur.push(part);
                rec(left - part, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if m >= 2 {
            rec(n, m, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl std::fmt::Display for TierType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Multiset permutations of a tier vector in lexicographic order.
#[derive(Clone, Debug)]
pub struct TierAssignments {
    next: Option<Vec<usize>>,
}

impl Iterator for TierAssignments {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.next.take()?;
        let mut v = out.clone();
        if next_permutation(&mut v) {
            self.next = Some(v);
        }
        Some(out)
    }
}

/// Advances `v` to the next lexicographic arrangement; false at the last one.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every tiered tree of type `p`: outer loop over tier assignments, inner
/// loop over spanning trees of each complete tiered graph.
pub fn enumerate_tiered_trees(p: &TierType) -> Result<impl Iterator<Item = TieredTree>> {
    enumerate_tiered_trees_with_limit(p, crate::TREE_CAPACITY)
}

pub fn enumerate_tiered_trees_with_limit(
    p: &TierType,
    limit: usize,
) -> Result<impl Iterator<Item = TieredTree>> {
    Error::check_capacity("tiered tree enumeration (vertices)", p.n(), limit)?;
    Ok(p
        .assignments()
        .flat_map(|tiers| CompleteTieredGraph::new(tiers).spanning_trees()))
}
