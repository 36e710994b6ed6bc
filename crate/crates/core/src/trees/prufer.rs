//! Brute-force oracle: every labelled tree (via Prüfer sequences) paired
//! with every tiering function into `1..=m`.

use num_bigint::BigInt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Tierings with at least two tiers in the image.
    All,
    /// Surjective tierings only.
    Proper,
}

/// Decodes a Prüfer sequence over `1..=n` into a sorted edge list.
fn decode(seq: &[usize], n: usize) -> Vec<[usize; 2]> {
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for &s in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push([leaf.min(s), leaf.max(s)]);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    if rest.len() == 2 {
        edges.push([rest[0], rest[1]]);
    }
    edges.sort_unstable();
    edges
}

/// All `n^(n-2)` labelled trees on `1..=n`, as sorted edge lists.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Vec<[usize; 2]>> {
    let len = n.saturating_sub(2);
    let mut seq = vec![1usize; len];
    let mut finished = n == 0;
    std::iter::from_fn(move || {
        if finished {
            return None;
        }
        let out = decode(&seq, n);
        // Odometer increment.
        let mut i = len;
        loop {
            if i == 0 {
                finished = true;
                break;
            }
            i -= 1;
            if seq[i] < n {
                seq[i] += 1;
                break;
            }
            seq[i] = 1;
        }
        Some(out)
    })
}

/// Calls `f(tiers)` for every tiering `t: 1..=n -> 1..=m` with
/// `t(u) < t(v)` on each edge `u < v`. Vertices are assigned in label
/// order, so every edge is checked when its larger endpoint is placed.
pub fn for_each_tiering(n: usize, m: usize, edges: &[[usize; 2]], mut f: impl FnMut(&[usize])) {
    let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &[u, v] in edges {
        lower[v].push(u);
    }
    let mut tiers = vec![0usize; n + 1];
    fn rec(
        v: usize,
        n: usize,
        m: usize,
        lower: &[Vec<usize>],
        tiers: &mut [usize],
        f: &mut dyn FnMut(&[usize]),
    ) {
        if v > n {
            f(&tiers[1..]);
            return;
        }
        let floor = lower[v].iter().map(|&u| tiers[u]).max().unwrap_or(0);
        for t in floor + 1..=m {
            tiers[v] = t;
            rec(v + 1, n, m, lower, tiers, f);
        }
    }
    rec(1, n, m, &lower, &mut tiers, &mut f);
}

pub fn count_brute(n: usize, m: usize, mode: CountMode) -> Result<BigInt> {
    count_brute_with_limit(n, m, mode, crate::TREE_CAPACITY)
}

/// Counts (tree, tiering) pairs by exhaustive enumeration. Tierings whose
/// image is a single tier are never counted, so `m = 1` and `n = 1` give 0.
pub fn count_brute_with_limit(n: usize, m: usize, mode: CountMode, limit: usize) -> Result<BigInt> {
    if n == 0 || m == 0 {
        return Err(Error::domain("count_brute requires n >= 1 and m >= 1"));
    }
    Error::check_capacity("brute-force tree count (vertices)", n, limit)?;
    let full_image = (1u64 << m) - 1;
    let mut total: u64 = 0;
    for edges in labeled_trees(n) {
        for_each_tiering(n, m, &edges, |tiers| {
            let image = tiers.iter().fold(0u64, |acc, &t| acc | 1 << (t - 1));
            let ok = match mode {
                CountMode::All => image.count_ones() >= 2,
                CountMode::Proper => image == full_image,
            };
            if ok {
                total += 1;
            }
        });
    }
    Ok(total.into())
}
