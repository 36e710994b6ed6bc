use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::activity::activities;
use crate::algebra::BivarPoly;
use crate::trees::CompleteTieredGraph;
use crate::{Error, Result};

/// A finite multigraph on vertices `1..=vertex_count`; loops and parallel
/// edges are allowed. Edge order is the order of `edges`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TutteMethod {
    Activities,
    DeletionContraction,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<[usize; 2]>) -> Result<Self> {
        for &[a, b] in &edges {
            if a == 0 || b == 0 || a > vertex_count || b > vertex_count {
                return Err(Error::domain(format!("edge ({a}, {b}) out of range")));
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (1..=n).map(|i| [i, i % n + 1]).collect();
        Graph { vertex_count: n, edges }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.push([a, b]);
            }
        }
        Graph { vertex_count: n, edges }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count + 1);
        let mut parts = self.vertex_count;
        for &[a, b] in &self.edges {
            if uf.union(a, b) {
                parts -= 1;
            }
        }
        parts == 1
    }

    /// Every spanning tree as a sorted list of edge indices.
    pub fn spanning_trees(&self) -> Vec<Vec<usize>> {
        let need = self.vertex_count.saturating_sub(1);
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(need);
        self.extend_forest(0, need, &mut chosen, &mut out);
        out
    }

    fn extend_forest(&self, from: usize, need: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == need {
            out.push(chosen.clone());
            return;
        }
        for i in from..self.edges.len() {
            if self.edges.len() - i < need - chosen.len() {
                break;
            }
            chosen.push(i);
            if self.is_forest(chosen) {
                self.extend_forest(i + 1, need, chosen, out);
            }
            chosen.pop();
        }
    }

    fn is_forest(&self, idx: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.vertex_count + 1);
        idx.iter().all(|&i| {
            let [a, b] = self.edges[i];
            uf.union(a, b)
        })
    }
}

impl From<&CompleteTieredGraph> for Graph {
    fn from(g: &CompleteTieredGraph) -> Self {
        Graph {
            vertex_count: g.n(),
            edges: g.edges().to_vec(),
        }
    }
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    /// False if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// The Tutte polynomial `T_G(x, y)` of a connected multigraph.
pub fn tutte_polynomial(g: &Graph, method: TutteMethod) -> Result<BivarPoly> {
    if !g.is_connected() {
        return Err(Error::domain("Tutte polynomial of a disconnected graph"));
    }
    Ok(match method {
        TutteMethod::Activities => {
            let mut t = BivarPoly::zero();
            for tree in g.spanning_trees() {
                let r = activities(g, &tree);
                t.add_term(r.internal, r.external, BigInt::from(1));
            }
            t
        }
        TutteMethod::DeletionContraction => delete_contract(g.vertex_count, &g.edges),
    })
}

fn delete_contract(vertex_count: usize, edges: &[[usize; 2]]) -> BivarPoly {
    let Some((&[a, b], rest)) = edges.split_last() else {
        return BivarPoly::one();
    };
    if a == b {
        return &BivarPoly::monomial(1, 0, 1) * &delete_contract(vertex_count, rest);
    }
    let contracted: Vec<[usize; 2]> = rest
        .iter()
        .map(|e| e.map(|v| if v == b { a } else { v }))
        .collect();
    let mut uf = UnionFind::new(vertex_count + 1);
    for &[u, v] in rest {
        uf.union(u, v);
    }
    if uf.find(a) != uf.find(b) {
        return &BivarPoly::monomial(1, 1, 0) * &delete_contract(vertex_count, &contracted);
    }
    let mut t = delete_contract(vertex_count, rest);
    t += &delete_contract(vertex_count, &contracted);
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(terms: &[(usize, usize, i64)]) -> BivarPoly {
        let mut p = BivarPoly::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    #[test]
    fn known_polynomials() {
        let c4 = xy(&[(3, 0, 1), (2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        let k3 = xy(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        // K_4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
        let k4 = xy(&[(3, 0, 1), (2, 0, 3), (1, 0, 2), (1, 1, 4), (0, 1, 2), (0, 2, 3), (0, 3, 1)]);
        for m in [TutteMethod::Activities, TutteMethod::DeletionContraction] {
            assert_eq!(tutte_polynomial(&Graph::cycle(4), m).unwrap(), c4);
            assert_eq!(tutte_polynomial(&Graph::complete(3), m).unwrap(), k3);
            assert_eq!(tutte_polynomial(&Graph::complete(4), m).unwrap(), k4);
            assert_eq!(tutte_polynomial(&Graph::complete(2), m).unwrap(), xy(&[(1, 0, 1)]));
        }
    }

    #[test]
    fn loops_and_parallel_edges() {
        let g = Graph::new(2, vec![[1, 2], [1, 2], [2, 2]]).unwrap();
        // two parallel edges give x + y, the loop multiplies by y
        let want = xy(&[(1, 1, 1), (0, 2, 1)]);
        for m in [TutteMethod::Activities, TutteMethod::DeletionContraction] {
            assert_eq!(tutte_polynomial(&g, m).unwrap(), want);
        }
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(3, vec![[1, 2]]).unwrap();
        assert!(tutte_polynomial(&g, TutteMethod::Activities).is_err());
        assert!(Graph::new(2, vec![[1, 3]]).is_err());
    }
}
