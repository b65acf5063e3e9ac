//! Exact 3-rainbow index by backtracking over edge colorings.
//!
//! Colors are assigned edge by edge in id order with first-use symmetry breaking
//! (edge `i` may use at most one more than the largest color among edges before
//! it), so each partition of the edges into color classes is visited once. After
//! every assignment a few recently failing triples are re-checked with the
//! uncolored edges treated as pairwise distinct fresh colors; if a triple fails
//! even then, no completion can rescue it.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::steiner::sdiam3;

use super::RainbowSearch;

pub const DEFAULT_MAX_EDGES: usize = 14;
pub const MAX_KMAX: usize = 8;
const KILLERS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    pub max_edges: usize,
    /// Search nodes allowed per value of k before giving up.
    pub node_budget: u64,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            max_edges: DEFAULT_MAX_EDGES,
            node_budget: 200_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    /// `None` when no coloring with at most `kmax` colors exists.
    pub rx3: Option<usize>,
    /// An optimal coloring with colors `1..=rx3`.
    pub coloring: Option<EdgeColoring>,
    /// The lower bound the search started from.
    pub lower_bound: usize,
    pub nodes: u64,
}

/// The 3-rainbow index, or `None` if it exceeds `kmax`.
pub fn exact_rx3(g: &Graph, kmax: usize) -> Result<Option<usize>> {
    Ok(exact_rx3_with(g, kmax, &ExactConfig::default())?.rx3)
}

pub fn exact_rx3_with(g: &Graph, kmax: usize, config: &ExactConfig) -> Result<ExactResult> {
    check_limits(g, kmax, config)?;
    let (lower, _) = sdiam3(g)?;
    let lower = lower.max(2);
    let mut nodes = 0;
    for k in lower..=kmax {
        let mut solver = Solver::new(g, k, config.node_budget);
        let found = solver.run()?;
        nodes += solver.nodes;
        if let Some(c) = found {
            return Ok(ExactResult {
                rx3: Some(k),
                coloring: Some(c),
                lower_bound: lower,
                nodes,
            });
        }
    }
    Ok(ExactResult {
        rx3: None,
        coloring: None,
        lower_bound: lower,
        nodes,
    })
}

/// A 3-rainbow coloring with at most `k` colors, if one exists.
pub fn find_rainbow_coloring(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    find_rainbow_coloring_with(g, k, &ExactConfig::default())
}

pub fn find_rainbow_coloring_with(g: &Graph, k: usize, config: &ExactConfig) -> Result<Option<EdgeColoring>> {
    check_limits(g, k, config)?;
    if !g.is_connected() {
        return Ok(None);
    }
    Solver::new(g, k, config.node_budget).run()
}

fn check_limits(g: &Graph, kmax: usize, config: &ExactConfig) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::TooFewVertices(g.n()));
    }
    if kmax > MAX_KMAX {
        return Err(Error::LimitExceeded {
            what: "kmax",
            actual: kmax,
            limit: MAX_KMAX,
        });
    }
    // colors plus one fresh color per uncolored edge must fit a 32-bit mask
    let max_edges = config.max_edges.min(32 - MAX_KMAX);
    if g.m() > max_edges {
        return Err(Error::LimitExceeded {
            what: "exact solver edge",
            actual: g.m(),
            limit: max_edges,
        });
    }
    Ok(())
}

struct Solver<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<u8>,
    triples: Vec<[usize; 3]>,
    killers: Vec<[usize; 3]>,
    nodes: u64,
    budget: u64,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, k: usize, budget: u64) -> Self {
        let n = g.n();
        let mut triples = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    triples.push([a, b, c]);
                }
            }
        }
        Solver {
            g,
            k,
            colors: Vec::with_capacity(g.m()),
            triples,
            killers: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> Result<Option<EdgeColoring>> {
        if self.search(0)? {
            let colors = self.colors.iter().map(|&c| c as u32 + 1).collect();
            Ok(Some(EdgeColoring::new(self.g, colors)?))
        } else {
            Ok(None)
        }
    }

    /// The current partial coloring with each uncolored edge given its own color.
    fn relaxed(&self) -> RainbowSearch<'a> {
        let m = self.g.m();
        let assigned = self.colors.len();
        let mut dense = self.colors.clone();
        dense.extend((assigned..m).map(|i| (self.k + i - assigned) as u8));
        RainbowSearch::new(self.g, dense, self.k + m - assigned)
    }

    fn killed(&self) -> bool {
        let search = self.relaxed();
        self.killers.iter().any(|&t| !search.exists(t))
    }

    fn remember(&mut self, t: [usize; 3]) {
        if let Some(pos) = self.killers.iter().position(|&x| x == t) {
            self.killers.remove(pos);
        }
        self.killers.insert(0, t);
        self.killers.truncate(KILLERS);
    }

    fn search(&mut self, i: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::LimitExceeded {
                what: "exact solver node",
                actual: self.nodes as usize,
                limit: self.budget as usize,
            });
        }
        if i == self.g.m() {
            let search = self.relaxed();
            if let Some(&t) = self.triples.iter().find(|&&t| !search.exists(t)) {
                self.remember(t);
                return Ok(false);
            }
            return Ok(true);
        }
        let used = self.colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        for c in 0..(used + 1).min(self.k) {
            self.colors.push(c as u8);
            if !self.killed() && self.search(i + 1)? {
                return Ok(true);
            }
            self.colors.pop();
        }
        Ok(false)
    }
}
