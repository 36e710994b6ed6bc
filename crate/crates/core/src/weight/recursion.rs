use crate::trees::{TieredTree, TreeCandidate};
use crate::Result;

/// Vertices reachable from `start` inside `within` (bitmask over `label - 1`).
pub(crate) fn flood(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[i];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Delete the smallest vertex `v`; each remaining component `T_i` hangs
/// off a neighbour `u_i` and contributes `|R_i| + w(T_i)`, where `R_i` are
/// the vertices of `T_i` above `v`'s tier with labels below `u_i`.
fn component_weight(adj: &[u64], tiers: &[usize], comp: u64) -> usize {
    if comp.count_ones() <= 1 {
        return 0;
    }
    let v = comp.trailing_zeros() as usize;
    let rest = comp & !(1u64 << v);
    let mut above = 0u64;
    let mut r = rest;
    while r != 0 {
        let i = r.trailing_zeros() as usize;
        r &= r - 1;
        if tiers[i] > tiers[v] {
            above |= 1 << i;
        }
    }
    let mut total = 0;
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let part = flood(adj, u, rest);
        let below_u = (1u64 << u) - 1;
        total += (part & above & below_u).count_ones() as usize;
        total += component_weight(adj, tiers, part);
    }
    total
}

/// The weight `w(T)` of a tiered tree.
pub fn tree_weight(t: &TieredTree) -> usize {
    let n = t.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    component_weight(&t.adjacency(), t.tiers(), all)
}

/// Validates first, then weighs.
pub fn weight_of_candidate(c: &TreeCandidate) -> Result<usize> {
    Ok(tree_weight(&c.validate()?))
}
