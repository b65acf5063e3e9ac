//! Edge colorings and the two dominating-set constructions.

mod table;
mod theorem3;
mod theorem4;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::verify::classes::{color_set, SetTriple};
use crate::verify::exact::{exact_rx3_with, ExactConfig};

pub use table::{lookup, Action, Route, ROWS};
pub use theorem3::{
    order_dangerous, stage1_periodic, theorem3_coloring, theorem3_coloring_with, Stage1State, Theorem3Options,
    Theorem3Output, Theorem3Report,
};
pub use theorem4::{theorem4_coloring, Theorem4Report};

/// A color for every edge of a graph, indexed by edge id. Colors are positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != g.m() {
            let (u, v) = g.edges()[colors.len().min(g.m().saturating_sub(1))];
            return Err(Error::UncoveredEdge(u, v));
        }
        if let Some(e) = colors.iter().position(|&c| c == 0) {
            let (u, v) = g.edges()[e];
            return Err(Error::InvalidParameters(format!("edge ({u}, {v}) has color 0")));
        }
        Ok(EdgeColoring { colors })
    }

    /// Builds a coloring from `(u, v, color)` triples covering every edge once.
    pub fn from_triples(g: &Graph, triples: &[(usize, usize, u32)]) -> Result<Self> {
        let mut colors = vec![0; g.m()];
        for &(u, v, c) in triples {
            let e = g.edge_id(u, v).ok_or(Error::InvalidParameters(format!(
                "({u}, {v}) is not an edge of the graph"
            )))?;
            colors[e] = c;
        }
        if let Some(e) = colors.iter().position(|&c| c == 0) {
            let (u, v) = g.edges()[e];
            return Err(Error::UncoveredEdge(u, v));
        }
        EdgeColoring::new(g, colors)
    }

    pub fn color(&self, e: EdgeId) -> u32 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Distinct colors in ascending order.
    pub fn palette(&self) -> Vec<u32> {
        let mut p = self.colors.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn num_colors(&self) -> usize {
        self.palette().len()
    }

    /// Colors renumbered `0..k` in ascending order, and `k`.
    pub fn dense(&self) -> (Vec<u8>, usize) {
        let palette = self.palette();
        let dense = self
            .colors
            .iter()
            .map(|c| palette.binary_search(c).unwrap().min(u8::MAX as usize) as u8)
            .collect();
        (dense, palette.len())
    }

    pub fn color_between(&self, g: &Graph, u: usize, v: usize) -> Option<u32> {
        g.edge_id(u, v).map(|e| self.colors[e])
    }
}

/// Three internally disjoint `v`–D paths whose union is rainbow; the first is a
/// single leg. Color sets are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SafetyCertificate {
    pub vertex: usize,
    pub paths: [Vec<usize>; 3],
    pub color_sets: [Vec<u32>; 3],
}

impl SafetyCertificate {
    /// Records the paths with their color sets under `c`. Paths must consist of
    /// edges of `g`.
    pub fn new(g: &Graph, c: &EdgeColoring, vertex: usize, paths: [Vec<usize>; 3]) -> Self {
        let color_sets = paths.clone().map(|p| {
            let mut s: Vec<u32> = p
                .windows(2)
                .map(|w| c.color(g.edge_id(w[0], w[1]).expect("path edge")))
                .collect();
            s.sort_unstable();
            s
        });
        SafetyCertificate {
            vertex,
            paths,
            color_sets,
        }
    }

    /// The color sets as bitmasks; colors must be at most 15.
    pub fn set_triple(&self) -> SetTriple {
        self.color_sets.clone().map(|s| color_set(&s))
    }
}

/// Distinct colors `1..n-1` on the edges of a BFS tree from vertex 0, in
/// discovery order; every other edge gets color 1.
pub fn spanning_tree_coloring(h: &Graph) -> Result<EdgeColoring> {
    let n = h.n();
    let mut colors = vec![1; h.m()];
    if n == 0 {
        return EdgeColoring::new(h, colors);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    let mut next = 1;
    while let Some(v) = queue.pop_front() {
        for (u, e) in h.incident(v) {
            if !seen[u] {
                seen[u] = true;
                colors[e] = next;
                next += 1;
                queue.push_back(u);
            }
        }
    }
    if let Some(u) = seen.iter().position(|&s| !s) {
        return Err(Error::Disconnected(0, u));
    }
    EdgeColoring::new(h, colors)
}

/// A 3-rainbow coloring of `G[D]` with colors `offset+1..=offset+d`.
#[derive(Debug, Clone)]
pub struct InnerColoring {
    /// `(edge of G, color)` for every edge of `G[D]`.
    pub assignment: Vec<(EdgeId, u32)>,
    /// Number of colors used.
    pub d: usize,
    /// Whether `d` is the exact 3-rainbow index of `G[D]`.
    pub optimal: bool,
}

/// Node budget for the exact solver inside the constructions; beyond it the
/// spanning-tree coloring is used.
const INNER_NODE_BUDGET: u64 = 200_000;

/// Colors `G[D]`: optimally when the exact solver handles it within its limits,
/// otherwise with a spanning-tree coloring (`|D| - 1` colors).
pub fn inner_coloring(g: &Graph, d: &[usize], offset: u32) -> Result<InnerColoring> {
    let mut d = d.to_vec();
    d.sort_unstable();
    d.dedup();
    if !g.induces_connected(&d) {
        return Err(Error::InducedDisconnected);
    }
    let (h, map) = g.induced(&d);
    let lift = |c: &EdgeColoring| -> Vec<(EdgeId, u32)> {
        h.edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| (g.edge_id(map[a], map[b]).unwrap(), offset + c.color(e)))
            .collect()
    };
    if d.len() >= 3 {
        let config = ExactConfig {
            node_budget: INNER_NODE_BUDGET,
            ..ExactConfig::default()
        };
        let kmax = (d.len() - 1).min(crate::verify::exact::MAX_KMAX);
        if h.m() <= config.max_edges {
            if let Ok(r) = exact_rx3_with(&h, kmax, &config) {
                if let (Some(k), Some(c)) = (r.rx3, r.coloring) {
                    return Ok(InnerColoring {
                        assignment: lift(&c),
                        d: k,
                        optimal: true,
                    });
                }
            }
        }
    }
    let c = spanning_tree_coloring(&h)?;
    Ok(InnerColoring {
        assignment: lift(&c),
        d: c.num_colors(),
        // one or two vertices: 0 or 1 colors is optimal
        optimal: d.len() <= 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_3_rainbow;

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::new(n, &e).unwrap()
    }

    fn k33() -> Graph {
        let e: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
        Graph::new(6, &e).unwrap()
    }

    #[test]
    fn spanning_single_vertex_is_empty() {
        let c = spanning_tree_coloring(&Graph::empty(1)).unwrap();
        assert!(c.is_empty());
        assert_eq!(c.num_colors(), 0);
    }

    #[test]
    fn spanning_k3_two_colors() {
        let g = complete(3);
        let c = spanning_tree_coloring(&g).unwrap();
        assert_eq!(c.num_colors(), 2);
        assert!(is_3_rainbow(&g, &c).unwrap().verdict);
    }

    #[test]
    fn spanning_k33_five_colors_verifies() {
        let g = k33();
        let c = spanning_tree_coloring(&g).unwrap();
        assert_eq!(c.num_colors(), 5);
        assert!(is_3_rainbow(&g, &c).unwrap().verdict);
    }

    #[test]
    fn spanning_disconnected_errors() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(spanning_tree_coloring(&g).unwrap_err(), Error::Disconnected(0, 2));
    }

    #[test]
    fn inner_sizes() {
        let g = complete(4);
        assert_eq!(inner_coloring(&g, &[2], 6).unwrap().d, 0);
        let tri = inner_coloring(&g, &[0, 1, 2], 6).unwrap();
        assert_eq!(tri.d, 2);
        assert!(tri.assignment.iter().all(|&(_, c)| c > 6));
        let mut big = k33();
        big = Graph::new(7, &[big.edges(), &[(0, 6), (3, 6)]].concat()).unwrap();
        assert_eq!(inner_coloring(&big, &[0, 1, 2, 3, 4, 5], 6).unwrap().d, 3);
    }

    #[test]
    fn inner_disconnected_errors() {
        let c6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(inner_coloring(&c6, &[0, 3], 6).unwrap_err(), Error::InducedDisconnected);
    }
}
