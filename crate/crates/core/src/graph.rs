//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Index of an edge in [`Graph::edges`].
pub type EdgeId = usize;

/// Undirected simple graph. Edges are stored once as `(u, v)` with `u < v`,
/// sorted lexicographically; the edge id is the position in that list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    // parallel to `adj`: the id of the edge to each neighbor
    adj_ids: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either orientation)
    /// collapse; self-loops are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut incident: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push((v, id));
            incident[v].push((u, id));
        }
        let mut adj = Vec::with_capacity(n);
        let mut adj_ids = Vec::with_capacity(n);
        for mut nb in incident {
            nb.sort_unstable();
            let (vs, ids): (Vec<_>, Vec<_>) = nb.into_iter().unzip();
            adj.push(vs);
            adj_ids.push(ids);
        }
        Ok(Graph {
            n,
            edges,
            adj,
            adj_ids,
        })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("no edges")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbors of `v` paired with the connecting edge id, ascending by neighbor.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.adj[v].iter().copied().zip(self.adj_ids[v].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search(&v)
            .ok()
            .map(|i| self.adj_ids[u][i])
    }

    /// Subgraph induced by `vertices`, relabelled in the order given.
    /// Returns the subgraph and the map from new ids to original ids.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut list = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX && i < j {
                    list.push((i, j));
                }
            }
        }
        let g = Graph::new(vertices.len(), &list).expect("induced edges are valid");
        (g, vertices.to_vec())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, |_| true).iter().all(|&r| r)
    }

    /// Vertices reachable from `start` through vertices accepted by `allowed`.
    pub(crate) fn reach(&self, start: usize, allowed: impl Fn(usize) -> bool) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        if !allowed(start) {
            return seen;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] && allowed(u) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// True iff the subgraph induced by `set` is connected (vacuously for empty sets).
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        let Some(&first) = set.first() else {
            return true;
        };
        let member = membership(self.n, set);
        let seen = self.reach(first, |v| member[v]);
        set.iter().all(|&v| seen[v])
    }
}

/// Boolean membership vector for a vertex set.
pub fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Connected components of `G - removed`, each sorted, ordered by smallest vertex.
pub fn components_minus(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let gone = membership(g.n(), removed);
    let mut assigned = gone.clone();
    let mut out = Vec::new();
    for s in 0..g.n() {
        if assigned[s] {
            continue;
        }
        let seen = g.reach(s, |v| !gone[v]);
        let comp: Vec<usize> = (0..g.n()).filter(|&v| seen[v]).collect();
        for &v in &comp {
            assigned[v] = true;
        }
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn k4_min_degree() {
        let all: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = Graph::new(4, &all).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.min_degree(), 3);
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 2), None);
    }

    #[test]
    fn components_of_cycle_minus_two() {
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(components_minus(&c6, &[0, 3]), vec![vec![1, 2], vec![4, 5]]);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(components_minus(&k4, &[0, 1, 2, 3]).is_empty());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let (h, map) = c6.induced(&[5, 0, 1]);
        assert_eq!(map, vec![5, 0, 1]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
        assert!(c6.induces_connected(&[5, 0, 1]));
        assert!(!c6.induces_connected(&[0, 3]));
    }
}
