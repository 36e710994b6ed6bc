use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::trees::TieredTree;
use crate::weight::tree_weight;
use crate::{Error, Result};

type Point = (usize, usize);

/// A complete nonambiguous tree: grid points `(x, y)` with `x` the column
/// counted from the left and `y` the row counted from the top; the root is
/// `(1, 1)`. A non-root point's parent is the nearest point to its left in
/// its row or the nearest point above it in its column, and exactly one of
/// those two must exist.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CnatJson", into = "CnatJson")]
pub struct Cnat {
    k: usize,
    points: BTreeSet<Point>,
}

#[derive(Serialize, Deserialize)]
struct CnatJson {
    k: usize,
    points: Vec<[usize; 2]>,
}

impl TryFrom<CnatJson> for Cnat {
    type Error = Error;

    fn try_from(j: CnatJson) -> Result<Self> {
        let c = Cnat::new(j.points.iter().map(|&[x, y]| (x, y)).collect())?;
        if c.k != j.k {
            return Err(Error::domain(format!("k = {} but the points give {}", j.k, c.k)));
        }
        Ok(c)
    }
}

impl From<Cnat> for CnatJson {
    fn from(c: Cnat) -> Self {
        CnatJson {
            k: c.k,
            points: c.points.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }
}

#[derive(Default)]
struct Links {
    parent: BTreeMap<Point, Point>,
    row_child: BTreeMap<Point, Point>,
    col_child: BTreeMap<Point, Point>,
}

fn links(points: &BTreeSet<Point>) -> Result<Links> {
    let mut l = Links::default();
    for &p in points {
        if p == (1, 1) {
            continue;
        }
        let left = points.iter().filter(|q| q.1 == p.1 && q.0 < p.0).map(|q| q.0).max();
        let above = points.iter().filter(|q| q.0 == p.0 && q.1 < p.1).map(|q| q.1).max();
        match (left, above) {
            (Some(x), None) => {
                l.parent.insert(p, (x, p.1));
                l.row_child.insert((x, p.1), p);
            }
            (None, Some(y)) => {
                l.parent.insert(p, (p.0, y));
                l.col_child.insert((p.0, y), p);
            }
            _ => {
                return Err(Error::domain(format!(
                    "point {p:?} needs exactly one point to its left or above"
                )))
            }
        }
    }
    Ok(l)
}

impl Cnat {
    /// Validates a point set.
    pub fn new(points: BTreeSet<Point>) -> Result<Self> {
        if !points.contains(&(1, 1)) {
            return Err(Error::domain("the root (1, 1) is missing"));
        }
        if points.iter().any(|&(x, y)| x == 0 || y == 0) {
            return Err(Error::domain("coordinates start at 1"));
        }
        let cols: BTreeSet<usize> = points.iter().map(|p| p.0).collect();
        let rows: BTreeSet<usize> = points.iter().map(|p| p.1).collect();
        if cols.len() != *cols.last().expect("nonempty") || rows.len() != *rows.last().expect("nonempty") {
            return Err(Error::domain("empty row or column between used ones"));
        }
        let l = links(&points)?;
        let mut internal = 0;
        for p in &points {
            match (l.row_child.contains_key(p), l.col_child.contains_key(p)) {
                (true, true) => internal += 1,
                (false, false) => {}
                _ => return Err(Error::domain(format!("point {p:?} has exactly one child"))),
            }
        }
        Ok(Cnat { k: internal, points })
    }

    /// The tree with only the root.
    pub fn root_only() -> Self {
        Cnat {
            k: 0,
            points: BTreeSet::from([(1, 1)]),
        }
    }

    /// Number of internal points.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    fn leaves(&self) -> Vec<Point> {
        let l = links(&self.points).expect("validated");
        self.points
            .iter()
            .filter(|p| !l.row_child.contains_key(p))
            .copied()
            .collect()
    }
}

/// Every CNAT with `k` internal points, in a fixed order.
pub fn enumerate_cnat(k: usize) -> Result<Vec<Cnat>> {
    Error::check_capacity("complete nonambiguous trees (internal points)", k, crate::CNAT_CAPACITY)?;
    let size = k + 1;
    let mut search = Search {
        size,
        total: 2 * k + 1,
        grid: vec![vec![false; size + 1]; size + 1],
        count: 0,
        row_closed: vec![false; size + 1],
        row_open: vec![false; size + 1],
        out: Vec::new(),
    };
    search.cell(1, 1);
    Ok(search.out)
}

/// Column-major backtracking over the `(k+1) x (k+1)` grid. A point whose
/// column below it is finished without a column child must be a leaf, which
/// closes its row; a point with a column child must get a row child.
struct Search {
    size: usize,
    total: usize,
    grid: Vec<Vec<bool>>,
    count: usize,
    row_closed: Vec<bool>,
    row_open: Vec<bool>,
    out: Vec<Cnat>,
}

impl Search {
    fn has_left(&self, x: usize, y: usize) -> Option<usize> {
        (1..x).rev().find(|&c| self.grid[c][y])
    }

    fn has_above(&self, x: usize, y: usize) -> bool {
        (1..y).any(|r| self.grid[x][r])
    }

    fn cell(&mut self, x: usize, y: usize) {
        if y > self.size {
            self.finish_column(x);
            return;
        }
        // Skip this cell.
        if !(x == 1 && y == 1) {
            self.cell(x, y + 1);
        }
        if self.count == self.total || self.row_closed[y] {
            return;
        }
        let left = self.has_left(x, y).is_some();
        if (x, y) != (1, 1) && left == self.has_above(x, y) {
            return;
        }
        let was_open = self.row_open[y];
        self.grid[x][y] = true;
        self.count += 1;
        self.row_open[y] = false;
        self.cell(x, y + 1);
        self.grid[x][y] = false;
        self.count -= 1;
        self.row_open[y] = was_open;
    }

    fn finish_column(&mut self, x: usize) {
        let points: Vec<usize> = (1..=self.size).filter(|&y| self.grid[x][y]).collect();
        if points.is_empty() {
            return;
        }
        // The column child of (x, y) is the next point down, if that point
        // hangs from above rather than from the left.
        let mut changed = Vec::new();
        for (i, &y) in points.iter().enumerate() {
            let has_col_child = points
                .get(i + 1)
                .is_some_and(|&y2| self.has_left(x, y2).is_none());
            if has_col_child {
                changed.push((y, self.row_open[y], self.row_closed[y]));
                self.row_open[y] = true;
            } else {
                changed.push((y, self.row_open[y], self.row_closed[y]));
                self.row_closed[y] = true;
            }
        }
        if x == self.size {
            let all_rows = (1..=self.size).all(|y| (1..=self.size).any(|c| self.grid[c][y]));
            if self.count == self.total && all_rows && !self.row_open.iter().any(|&o| o) {
                let pts: BTreeSet<Point> = (1..=self.size)
                    .flat_map(|c| (1..=self.size).map(move |r| (c, r)))
                    .filter(|&(c, r)| self.grid[c][r])
                    .collect();
                let c = Cnat::new(pts).expect("search emits valid trees");
                debug_assert_eq!(c.k, self.size - 1);
                self.out.push(c);
            }
        } else {
            self.cell(x + 1, 1);
        }
        for (y, open, closed) in changed.into_iter().rev() {
            self.row_open[y] = open;
            self.row_closed[y] = closed;
        }
    }
}

/// Flattened copy of a point set: used columns and rows renumbered from 1.
fn flatten_points(points: &BTreeSet<Point>) -> (BTreeSet<Point>, Vec<usize>, Vec<usize>) {
    let xs: Vec<usize> = points.iter().map(|p| p.0).collect::<BTreeSet<_>>().into_iter().collect();
    let ys: Vec<usize> = points.iter().map(|p| p.1).collect::<BTreeSet<_>>().into_iter().collect();
    let flat = points
        .iter()
        .map(|&(x, y)| {
            (
                xs.binary_search(&x).expect("present") + 1,
                ys.binary_search(&y).expect("present") + 1,
            )
        })
        .collect();
    (flat, xs, ys)
}

/// Tiers and edges on labels `1..=k+1` (one label per column).
fn forward(c: &Cnat) -> (Vec<usize>, Vec<[usize; 2]>) {
    let size = c.k + 1;
    let mut tiers = vec![0; size];
    for (x, y) in c.leaves() {
        tiers[x - 1] = size + 1 - y;
    }
    let mut edges = Vec::new();
    if size == 1 {
        return (tiers, edges);
    }
    let l = links(&c.points).expect("validated");
    let column_one_internal = c.points.iter().filter(|p| p.0 == 1 && l.row_child.contains_key(p));
    for p in column_one_internal {
        let r = l.row_child[p];
        let mut sub = BTreeSet::new();
        let mut stack = vec![r];
        while let Some(q) = stack.pop() {
            sub.insert(q);
            stack.extend(l.row_child.get(&q));
            stack.extend(l.col_child.get(&q));
        }
        let (flat, xs, _) = flatten_points(&sub);
        let child = Cnat::new(flat).expect("subtrees of a CNAT are CNATs");
        let (_, sub_edges) = forward(&child);
        edges.extend(sub_edges.iter().map(|&[a, b]| [xs[a - 1], xs[b - 1]]));
        let attach = xs
            .iter()
            .copied()
            .filter(|&v| tiers[v - 1] > tiers[0])
            .min()
            .expect("some vertex of the component sits above vertex 1");
        edges.push([1, attach]);
    }
    (tiers, edges)
}

/// The weight-zero fully tiered tree on `k + 1` vertices attached to a CNAT.
/// Column `j` becomes vertex `j`, on the tier given by the row of the leaf
/// in that column counted from the bottom.
pub fn cnat_to_tiered(c: &Cnat) -> TieredTree {
    let (tiers, edges) = forward(c);
    TieredTree::new(tiers, edges).expect("construction yields a fully tiered tree")
}

fn backward(tiers: &[usize], edges: &[[usize; 2]]) -> BTreeSet<Point> {
    let n = tiers.len();
    let mut points = BTreeSet::from([(1, 1)]);
    if n == 1 {
        return points;
    }
    let mut adj = vec![0u64; n];
    for &[a, b] in edges {
        adj[a - 1] |= 1 << (b - 1);
        adj[b - 1] |= 1 << (a - 1);
    }
    let rest = ((1u64 << n) - 1) & !1;
    let mut seen = 0u64;
    let mut nbrs = adj[0];
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let comp = crate::weight::flood_mask(&adj, u, rest);
        debug_assert_eq!(comp & seen, 0);
        seen |= comp;
        let labels: Vec<usize> = (0..n).filter(|&i| comp & (1 << i) != 0).map(|i| i + 1).collect();
        let local = |v: usize| labels.binary_search(&v).expect("in component") + 1;
        let mut sorted_tiers: Vec<usize> = labels.iter().map(|&v| tiers[v - 1]).collect();
        sorted_tiers.sort_unstable();
        let sub_tiers: Vec<usize> = labels
            .iter()
            .map(|&v| sorted_tiers.binary_search(&tiers[v - 1]).expect("present") + 1)
            .collect();
        let sub_edges: Vec<[usize; 2]> = edges
            .iter()
            .filter(|e| e[0] != 1 && comp & (1 << (e[0] - 1)) != 0)
            .map(|&[a, b]| [local(a), local(b)])
            .collect();
        let sub = backward(&sub_tiers, &sub_edges);
        let size = labels.len();
        // Row r of the sub-grid holds the leaf of the vertex with local tier size + 1 - r.
        let row_of = |r: usize| n + 1 - sorted_tiers[size - r];
        for &(x, y) in &sub {
            points.insert((labels[x - 1], row_of(y)));
        }
        points.insert((1, row_of(1)));
    }
    points.insert((1, n + 1 - tiers[0]));
    points
}

/// Inverse of [`cnat_to_tiered`].
pub fn tiered_to_cnat(t: &TieredTree) -> Result<Cnat> {
    if !t.is_fully_tiered() {
        return Err(Error::domain("tiered_to_cnat needs a fully tiered tree"));
    }
    let w = tree_weight(t);
    if w != 0 {
        return Err(Error::domain(format!("tiered_to_cnat needs weight 0, got {w}")));
    }
    Cnat::new(backward(t.tiers(), t.edges()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|k| enumerate_cnat(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 33, 456]);
        assert_eq!(
            enumerate_cnat(1).unwrap()[0].points(),
            &BTreeSet::from([(1, 1), (1, 2), (2, 1)])
        );
        assert!(enumerate_cnat(6).is_err());
    }

    #[test]
    fn validation() {
        assert!(Cnat::new(BTreeSet::from([(1, 1), (2, 1)])).is_err());
        assert!(Cnat::new(BTreeSet::from([(1, 1), (1, 2), (3, 1)])).is_err());
        assert!(Cnat::new(BTreeSet::from([(1, 2)])).is_err());
        // (2,2) has a point to its left and one above
        assert!(Cnat::new(BTreeSet::from([(1, 1), (1, 2), (2, 1), (2, 2)])).is_err());
    }

    #[test]
    fn two_vertex_tree() {
        let c = &enumerate_cnat(1).unwrap()[0];
        let t = cnat_to_tiered(c);
        assert_eq!(t.tiers(), &[1, 2]);
        assert_eq!(&tiered_to_cnat(&t).unwrap(), c);
    }

    #[test]
    fn round_trip() {
        for k in 0..=3 {
            for c in enumerate_cnat(k).unwrap() {
                let t = cnat_to_tiered(&c);
                assert!(t.is_fully_tiered());
                assert_eq!(tree_weight(&t), 0);
                assert_eq!(tiered_to_cnat(&t).unwrap(), c);
            }
        }
    }

    #[test]
    fn json_shape() {
        let c = &enumerate_cnat(1).unwrap()[0];
        assert_eq!(c.to_json(), r#"{"k":1,"points":[[1,1],[1,2],[2,1]]}"#);
        let back: Cnat = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(&back, c);
    }
}
