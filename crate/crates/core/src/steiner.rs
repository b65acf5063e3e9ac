//! Shortest-path distances and the 3-terminal Steiner distance.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Unweighted single-source distances; `None` for unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap() + 1;
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// All-pairs shortest-path lengths of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distances {
    n: usize,
    d: Vec<usize>,
}

impl Distances {
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[usize] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Steiner distance of `{a, b, c}` via the median vertex.
    pub fn steiner3(&self, [a, b, c]: [usize; 3]) -> usize {
        let (ra, rb, rc) = (self.row(a), self.row(b), self.row(c));
        (0..self.n).map(|m| ra[m] + rb[m] + rc[m]).min().unwrap_or(0)
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<Distances> {
    let n = g.n();
    let rows: Vec<Vec<Option<usize>>> = (0..n).into_par_iter().map(|s| bfs_distances(g, s)).collect();
    let mut d = Vec::with_capacity(n * n);
    for (u, row) in rows.iter().enumerate() {
        for (v, x) in row.iter().enumerate() {
            d.push(x.ok_or(Error::Disconnected(u, v))?);
        }
    }
    Ok(Distances { n, d })
}

/// Size of a smallest tree containing the three vertices. A minimum Steiner tree
/// for three terminals is the union of three shortest paths meeting at a median.
pub fn steiner_distance3(g: &Graph, s: [usize; 3]) -> Result<usize> {
    let rows: Vec<_> = s.iter().map(|&x| bfs_distances(g, x)).collect();
    (0..g.n())
        .filter_map(|m| Some(rows[0][m]? + rows[1][m]? + rows[2][m]?))
        .min()
        .ok_or(Error::Disconnected(s[0], s[1]))
}

/// Maximum Steiner distance over all 3-sets, with the lexicographically first
/// triple attaining it.
pub fn sdiam3(g: &Graph) -> Result<(usize, [usize; 3])> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let dist = all_pairs_distances(g)?;
    let best = (0..n - 2)
        .into_par_iter()
        .map(|a| {
            let mut best = (0usize, [a, a + 1, a + 2]);
            for b in a + 1..n - 1 {
                for c in b + 1..n {
                    let d = dist.steiner3([a, b, c]);
                    if d > best.0 {
                        best = (d, [a, b, c]);
                    }
                }
            }
            best
        })
        .reduce_with(|x, y| if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x })
        .unwrap();
    Ok(best)
}
