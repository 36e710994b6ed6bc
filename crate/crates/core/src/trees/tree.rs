use std::fmt;

use serde::{Deserialize, Serialize};

/// Vertex sets are handled as `u64` bitmasks downstream.
pub const MAX_VERTICES: usize = 64;

/// A validated tiered tree in canonical form: edges stored as `[u, v]` with
/// `u < v`, sorted ascending.
///
/// Serializes as `{"n": .., "tiers": [..], "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TreeCandidate")]
pub struct TieredTree {
    n: usize,
    tiers: Vec<usize>,
    edges: Vec<[usize; 2]>,
}

/// Unchecked input for [`TieredTree`]: any labels, any edge orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCandidate {
    pub n: usize,
    pub tiers: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
}

/// The first constraint a candidate breaks, with the offending edge when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TooManyVertices { n: usize },
    TierLength { n: usize, found: usize },
    ZeroTier { vertex: usize },
    EdgeOutOfRange { edge: [usize; 2] },
    SelfLoop { vertex: usize },
    DuplicateEdge { edge: [usize; 2] },
    SameTier { edge: [usize; 2] },
    /// The smaller label sits on the higher (or equal) tier.
    TierOrder { edge: [usize; 2] },
    Cycle { edge: [usize; 2] },
    Disconnected { edges: usize, needed: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            TooManyVertices { n } => write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}"),
            TierLength { n, found } => write!(f, "expected {n} tier entries, found {found}"),
            ZeroTier { vertex } => write!(f, "vertex {vertex} has tier 0 (tiers start at 1)"),
            EdgeOutOfRange { edge } => write!(f, "edge {edge:?} uses a label outside 1..=n"),
            SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            DuplicateEdge { edge } => write!(f, "edge {edge:?} appears twice"),
            SameTier { edge } => write!(f, "edge {edge:?} joins two vertices on the same tier"),
            TierOrder { edge } => write!(
                f,
                "edge {edge:?}: smaller label {} sits above larger label {}",
                edge[0], edge[1]
            ),
            Cycle { edge } => write!(f, "edge {edge:?} closes a cycle"),
            Disconnected { edges, needed } => {
                write!(f, "only {edges} edges, a spanning tree needs {needed}")
            }
        }
    }
}

impl std::error::Error for Violation {}

impl TreeCandidate {
    pub fn validate(&self) -> Result<TieredTree, Violation> {
        let n = self.n;
        if n > MAX_VERTICES {
            return Err(Violation::TooManyVertices { n });
        }
        if self.tiers.len() != n {
            return Err(Violation::TierLength {
                n,
                found: self.tiers.len(),
            });
        }
        if let Some(i) = self.tiers.iter().position(|&t| t == 0) {
            return Err(Violation::ZeroTier { vertex: i + 1 });
        }
        let mut root: Vec<usize> = (0..=n).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[a, b] in &self.edges {
            let edge = [a.min(b), a.max(b)];
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Violation::EdgeOutOfRange { edge: [a, b] });
            }
            if a == b {
                return Err(Violation::SelfLoop { vertex: a });
            }
            if !seen.insert(edge) {
                return Err(Violation::DuplicateEdge { edge });
            }
            let (tu, tv) = (self.tiers[edge[0] - 1], self.tiers[edge[1] - 1]);
            if tu == tv {
                return Err(Violation::SameTier { edge });
            }
            if tu > tv {
                return Err(Violation::TierOrder { edge });
            }
            let (ra, rb) = (find(&mut root, edge[0]), find(&mut root, edge[1]));
            if ra == rb {
                return Err(Violation::Cycle { edge });
            }
            root[ra] = rb;
            edges.push(edge);
        }
        let needed = n.saturating_sub(1);
        if edges.len() < needed {
            return Err(Violation::Disconnected {
                edges: edges.len(),
                needed,
            });
        }
        edges.sort_unstable();
        Ok(TieredTree {
            n,
            tiers: self.tiers.clone(),
            edges,
        })
    }
}

impl From<&TieredTree> for TreeCandidate {
    fn from(t: &TieredTree) -> Self {
        TreeCandidate {
            n: t.n,
            tiers: t.tiers.clone(),
            edges: t.edges.clone(),
        }
    }
}

impl TryFrom<TreeCandidate> for TieredTree {
    type Error = Violation;

    fn try_from(c: TreeCandidate) -> Result<Self, Violation> {
        c.validate()
    }
}

impl TieredTree {
    /// Validating constructor.
    pub fn new(tiers: Vec<usize>, edges: Vec<[usize; 2]>) -> Result<Self, Violation> {
        TreeCandidate {
            n: tiers.len(),
            tiers,
            edges,
        }
        .validate()
    }

    /// Callers guarantee the edges are canonical and form a valid tiered tree.
    pub(crate) fn from_canonical(tiers: Vec<usize>, edges: Vec<[usize; 2]>) -> Self {
        let t = TieredTree {
            n: tiers.len(),
            tiers,
            edges,
        };
        debug_assert_eq!(TreeCandidate::from(&t).validate().as_ref(), Ok(&t));
        t
    }

    /// The one-vertex tree, the base case of the weight recursion.
    pub fn single_vertex(tier: usize) -> Self {
        TieredTree {
            n: 1,
            tiers: vec![tier.max(1)],
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tiers(&self) -> &[usize] {
        &self.tiers
    }

    /// Tier of vertex `v` (1-based label).
    pub fn tier(&self, v: usize) -> usize {
        self.tiers[v - 1]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&[u.min(v), u.max(v)]).is_ok()
    }

    /// Neighbour bitmasks indexed by `label - 1`.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &[u, v] in &self.edges {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        adj
    }

    /// Number of distinct tiers in use.
    pub fn tier_count(&self) -> usize {
        let mut t = self.tiers.clone();
        t.sort_unstable();
        t.dedup();
        t.len()
    }

    /// True when every vertex is on tier 1 or 2 and both tiers are used.
    pub fn is_maxmin(&self) -> bool {
        self.n >= 2 && self.tiers.iter().all(|&t| t == 1 || t == 2)
    }

    /// True when the tiers are exactly `1..=n` in some order.
    pub fn is_fully_tiered(&self) -> bool {
        let mut t = self.tiers.clone();
        t.sort_unstable();
        t.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Labels on tier 2 (the maxima of a maxmin tree).
    pub fn maxima(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.tier(v) == 2).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(tiers: &[usize], edges: &[[usize; 2]]) -> TreeCandidate {
        TreeCandidate {
            n: tiers.len(),
            tiers: tiers.to_vec(),
            edges: edges.to_vec(),
        }
    }

    #[test]
    fn accepts_small_trees() {
        assert!(cand(&[1, 2], &[[1, 2]]).validate().is_ok());
        assert!(cand(&[1, 2, 3], &[[1, 3], [2, 3]]).validate().is_ok());
        assert!(cand(&[1], &[]).validate().is_ok());
    }

    #[test]
    fn rejects_with_named_witness() {
        assert_eq!(
            cand(&[2, 1], &[[1, 2]]).validate(),
            Err(Violation::TierOrder { edge: [1, 2] })
        );
        assert_eq!(
            cand(&[1, 1], &[[1, 2]]).validate(),
            Err(Violation::SameTier { edge: [1, 2] })
        );
        assert_eq!(
            cand(&[1, 2, 3], &[[1, 2], [2, 3], [1, 3]]).validate(),
            Err(Violation::Cycle { edge: [1, 3] })
        );
        assert_eq!(
            cand(&[1, 2, 3], &[[1, 2]]).validate(),
            Err(Violation::Disconnected { edges: 1, needed: 2 })
        );
        assert_eq!(
            cand(&[1, 2], &[[1, 3]]).validate(),
            Err(Violation::EdgeOutOfRange { edge: [1, 3] })
        );
        assert_eq!(
            cand(&[1, 2, 3], &[[1, 2], [2, 1]]).validate(),
            Err(Violation::DuplicateEdge { edge: [1, 2] })
        );
        assert_eq!(
            cand(&[1, 0], &[[1, 2]]).validate(),
            Err(Violation::ZeroTier { vertex: 2 })
        );
    }

    #[test]
    fn canonical_json() {
        let t = cand(&[1, 2, 3], &[[3, 2], [3, 1]]).validate().unwrap();
        assert_eq!(t.to_json(), r#"{"n":3,"tiers":[1,2,3],"edges":[[1,3],[2,3]]}"#);
        let back: TieredTree = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let bad = serde_json::from_str::<TieredTree>(r#"{"n":2,"tiers":[2,1],"edges":[[1,2]]}"#);
        assert!(bad.is_err());
    }
}
