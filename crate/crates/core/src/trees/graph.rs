use super::TieredTree;

/// The maximal graph admitting a given tiering: every pair `u < v` with
/// `tier(u) < tier(v)`, edges in ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteTieredGraph {
    tiers: Vec<usize>,
    edges: Vec<[usize; 2]>,
}

impl CompleteTieredGraph {
    /// `tiers[v - 1]` is the tier of vertex `v`.
    pub fn new(tiers: Vec<usize>) -> Self {
        let n = tiers.len();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if tiers[u - 1] < tiers[v - 1] {
                    edges.push([u, v]);
                }
            }
        }
        Self { tiers, edges }
    }

    pub fn of_tree(t: &TieredTree) -> Self {
        Self::new(t.tiers().to_vec())
    }

    pub fn n(&self) -> usize {
        self.tiers.len()
    }

    pub fn tiers(&self) -> &[usize] {
        &self.tiers
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        let mut adj = vec![0u64; n];
        for &[u, v] in &self.edges {
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[i];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Spanning trees in lexicographic order of their sorted edge lists.
    pub fn spanning_trees(&self) -> SpanningTrees {
        let done = !self.is_connected();
        SpanningTrees {
            graph: self.clone(),
            stack: Vec::new(),
            cursor: 0,
            done,
        }
    }
}

/// Backtracking over edge subsets: extend the current forest by the
/// smallest admissible edge, emit at `n - 1` edges, then advance.
#[derive(Clone, Debug)]
pub struct SpanningTrees {
    graph: CompleteTieredGraph,
    stack: Vec<usize>,
    cursor: usize,
    done: bool,
}

impl SpanningTrees {
    fn extends_forest(&self, candidate: usize) -> bool {
        let n = self.graph.n();
        let mut root: Vec<usize> = (0..=n).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for &i in &self.stack {
            let [u, v] = self.graph.edges[i];
            let (a, b) = (find(&mut root, u), find(&mut root, v));
            root[a] = b;
        }
        let [u, v] = self.graph.edges[candidate];
        find(&mut root, u) != find(&mut root, v)
    }

    fn emit(&self) -> TieredTree {
        let edges = self.stack.iter().map(|&i| self.graph.edges[i]).collect();
        TieredTree::from_canonical(self.graph.tiers.clone(), edges)
    }
}

impl Iterator for SpanningTrees {
    type Item = TieredTree;

    fn next(&mut self) -> Option<TieredTree> {
        if self.done {
            return None;
        }
        let need = self.graph.n().saturating_sub(1);
        if need == 0 {
            self.done = true;
            return Some(self.emit());
        }
        let total = self.graph.edges.len();
        loop {
            if self.stack.len() == need {
                let tree = self.emit();
                let last = self.stack.pop().expect("stack holds need > 0 edges");
                self.cursor = last + 1;
                return Some(tree);
            }
            if total - self.cursor.min(total) < need - self.stack.len() {
                match self.stack.pop() {
                    Some(last) => {
                        self.cursor = last + 1;
                        continue;
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
            let e = self.cursor;
            self.cursor += 1;
            if self.extends_forest(e) {
                self.stack.push(e);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle() {
        let g = CompleteTieredGraph::new(vec![1, 1, 2, 2]);
        assert_eq!(g.edges(), &[[1, 3], [1, 4], [2, 3], [2, 4]]);
        let trees: Vec<_> = g.spanning_trees().collect();
        assert_eq!(trees.len(), 4);
        let lists: Vec<_> = trees.iter().map(|t| t.edges().to_vec()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        assert_eq!(lists, sorted);
    }

    #[test]
    fn disconnected_graph_has_no_trees() {
        let g = CompleteTieredGraph::new(vec![1, 2, 2, 1]);
        assert_eq!(g.edges(), &[[1, 2], [1, 3]]);
        assert!(!g.is_connected());
        assert_eq!(g.spanning_trees().count(), 0);
    }

    #[test]
    fn degenerate_sizes() {
        let g = CompleteTieredGraph::new(vec![1]);
        assert!(g.edges().is_empty());
        assert_eq!(g.spanning_trees().count(), 1);
        assert_eq!(CompleteTieredGraph::new(vec![1, 2]).spanning_trees().count(), 1);
    }

    #[test]
    fn complete_graph_matches_cayley() {
        // Fully tiered with identity tiering gives K_n.
        for n in 1..=6usize {
            let g = CompleteTieredGraph::new((1..=n).collect());
            let expected = if n == 1 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(g.spanning_trees().count(), expected);
        }
    }
}
