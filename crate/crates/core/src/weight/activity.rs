use serde::Serialize;

use super::tutte::Graph;
use crate::trees::{CompleteTieredGraph, TieredTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeActivity {
    pub edge: [usize; 2],
    pub in_tree: bool,
    pub active: bool,
}

/// Activities of a spanning tree relative to the edge order of its graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivityReport {
    pub internal: usize,
    pub external: usize,
    pub edges: Vec<EdgeActivity>,
}

/// Activities of `t` as a spanning tree of `K_t` with lexicographic edge order.
pub fn external_activity(t: &TieredTree) -> ActivityReport {
    let g = Graph::from(&CompleteTieredGraph::of_tree(t));
    let tree: Vec<usize> = g
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| t.has_edge(e[0], e[1]))
        .map(|(i, _)| i)
        .collect();
    activities(&g, &tree)
}

/// A non-tree edge is externally active when it is the least edge of its
/// fundamental cycle; a tree edge is internally active when it is the least
/// edge of its fundamental cut.
pub(crate) fn activities(g: &Graph, tree: &[usize]) -> ActivityReport {
    let n = g.vertex_count;
    let mut in_tree = vec![false; g.edges.len()];
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    for &i in tree {
        in_tree[i] = true;
        let [a, b] = g.edges[i];
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut report = ActivityReport {
        internal: 0,
        external: 0,
        edges: Vec::with_capacity(g.edges.len()),
    };
    for (i, &[a, b]) in g.edges.iter().enumerate() {
        let active = if in_tree[i] {
            let side = reach(&adj, a, Some(i), n);
            g.edges
                .iter()
                .enumerate()
                .filter(|(_, &[u, v])| side[u] != side[v])
                .all(|(j, _)| j >= i)
        } else {
            tree_path(&adj, a, b, n).into_iter().all(|j| j > i)
        };
        if active {
            if in_tree[i] {
                report.internal += 1;
            } else {
                report.external += 1;
            }
        }
        report.edges.push(EdgeActivity {
            edge: [a, b],
            in_tree: in_tree[i],
            active,
        });
    }
    report
}

fn reach(adj: &[Vec<(usize, usize)>], from: usize, skip: Option<usize>, n: usize) -> Vec<bool> {
    let mut seen = vec![false; n + 1];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &(w, e) in &adj[u] {
            if Some(e) != skip && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Edge indices on the tree path between `a` and `b`.
fn tree_path(adj: &[Vec<(usize, usize)>], a: usize, b: usize, n: usize) -> Vec<usize> {
    let mut via: Vec<Option<(usize, usize)>> = vec![None; n + 1];
    let mut seen = vec![false; n + 1];
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        for &(w, e) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                via[w] = Some((u, e));
                stack.push(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = b;
    while let Some((prev, e)) = via[cur] {
        path.push(e);
        cur = prev;
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::tree_weight;

    #[test]
    fn path_on_three_tiers() {
        let t = TieredTree::new(vec![1, 2, 3], vec![[1, 3], [2, 3]]).unwrap();
        let r = external_activity(&t);
        assert_eq!(r.external, 1);
        assert_eq!(r.external, tree_weight(&t));
        assert!(r.edges[0].active && !r.edges[0].in_tree);
    }

    #[test]
    fn unique_spanning_tree_has_no_external_activity() {
        // K_t of tiers (1, 2, 2) is the star at vertex 1
        let t = TieredTree::new(vec![1, 2, 2], vec![[1, 2], [1, 3]]).unwrap();
        let r = external_activity(&t);
        assert_eq!((r.external, r.internal), (0, 2));
    }
}
