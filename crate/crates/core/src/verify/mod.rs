//! Independent checks of 3-rainbow colorings: rainbow S-tree existence by
//! dynamic programming, the all-triples verdict, and safety-certificate checks.
//! Nothing here reuses the coloring constructions.

pub mod classes;
pub mod exact;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::coloring::{EdgeColoring, SafetyCertificate};
use crate::error::{Error, Result};
use crate::graph::{membership, Graph};

/// Colors beyond this many make the used-color dimension of the DP too large.
pub const DEFAULT_COLOR_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub color_limit: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            color_limit: DEFAULT_COLOR_LIMIT,
        }
    }
}

/// Why a verification failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// A 3-set with no rainbow tree.
    Triple([usize; 3]),
    /// An outside vertex whose certificate does not check out.
    Certificate { vertex: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub triples_checked: usize,
    pub colors: usize,
}

/// Rainbow-tree search for one coloring, with colors renumbered densely.
pub(crate) struct RainbowSearch<'a> {
    g: &'a Graph,
    color: Vec<u8>,
    k: usize,
}

impl<'a> RainbowSearch<'a> {
    /// `color[e] < k` for every edge; `k` must fit in a `u32` mask.
    pub(crate) fn new(g: &'a Graph, color: Vec<u8>, k: usize) -> Self {
        debug_assert!(k <= 32 && color.iter().all(|&c| (c as usize) < k));
        RainbowSearch { g, color, k }
    }

    fn from_coloring(g: &'a Graph, c: &EdgeColoring, limit: usize) -> Result<Self> {
        if c.len() != g.m() {
            let missing = g.edges()[c.len().min(g.m().saturating_sub(1))];
            return Err(Error::UncoveredEdge(missing.0, missing.1));
        }
        let (dense, k) = c.dense();
        if k > limit.min(32) {
            return Err(Error::LimitExceeded {
                what: "verifier color",
                actual: k,
                limit: limit.min(32),
            });
        }
        Ok(RainbowSearch::new(g, dense, k))
    }

    /// Is there a rainbow tree containing all of `s`?
    ///
    /// States are (terminals covered, vertex, colors used) for a rainbow tree
    /// containing those terminals and the vertex. States are expanded in order of
    /// the number of colors used, so the first full state found is a smallest
    /// rainbow S-tree. Walks that revisit a vertex only produce states that are
    /// also reachable by trees, since a rainbow walk spans a rainbow tree with a
    /// subset of its colors.
    pub(crate) fn exists(&self, s: [usize; 3]) -> bool {
        const FULL: u8 = 0b111;
        let n = self.g.n();
        let mut seen: FxHashSet<u64> = FxHashSet::default();
        let mut stored: Vec<Vec<u32>> = vec![Vec::new(); 8 * n];
        let mut buckets: Vec<Vec<(u8, usize, u32)>> = vec![Vec::new(); self.k + 1];
        for (i, &x) in s.iter().enumerate() {
            buckets[0].push((1 << i, x, 0));
        }
        for pc in 0..=self.k {
            while let Some((t, v, mask)) = buckets[pc].pop() {
                if !seen.insert(((t as u64) << 56) | ((v as u64) << 32) | mask as u64) {
                    continue;
                }
                for t2 in 1..8u8 {
                    if t2 & t != 0 {
                        continue;
                    }
                    for &m2 in &stored[t2 as usize * n + v] {
                        if mask & m2 == 0 {
                            if t | t2 == FULL {
                                return true;
                            }
                            let merged = mask | m2;
                            buckets[merged.count_ones() as usize].push((t | t2, v, merged));
                        }
                    }
                }
                stored[t as usize * n + v].push(mask);
                if pc < self.k {
                    for (u, e) in self.g.incident(v) {
                        let bit = 1u32 << self.color[e];
                        if mask & bit == 0 {
                            buckets[pc + 1].push((t, u, mask | bit));
                        }
                    }
                }
            }
        }
        false
    }
}

/// True iff some tree containing `s` has pairwise distinct edge colors.
pub fn exists_rainbow_s_tree(g: &Graph, c: &EdgeColoring, s: [usize; 3]) -> Result<bool> {
    exists_rainbow_s_tree_with(g, c, s, &VerifyConfig::default())
}

pub fn exists_rainbow_s_tree_with(
    g: &Graph,
    c: &EdgeColoring,
    s: [usize; 3],
    config: &VerifyConfig,
) -> Result<bool> {
    if let Some(&x) = s.iter().find(|&&x| x >= g.n()) {
        return Err(Error::VertexOutOfRange { u: x, v: x, n: g.n() });
    }
    Ok(RainbowSearch::from_coloring(g, c, config.color_limit)?.exists(s))
}

/// Checks every 3-set; the witness is the lexicographically first failing one.
pub fn is_3_rainbow(g: &Graph, c: &EdgeColoring) -> Result<VerifyReport> {
    is_3_rainbow_with(g, c, &VerifyConfig::default())
}

pub fn is_3_rainbow_with(g: &Graph, c: &EdgeColoring, config: &VerifyConfig) -> Result<VerifyReport> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let search = RainbowSearch::from_coloring(g, c, config.color_limit)?;
    let failing = (0..n - 2)
        .into_par_iter()
        .filter_map(|a| {
            for b in a + 1..n - 1 {
                for cc in b + 1..n {
                    if !search.exists([a, b, cc]) {
                        return Some([a, b, cc]);
                    }
                }
            }
            None
        })
        .min();
    Ok(VerifyReport {
        verdict: failing.is_none(),
        witness: failing.map(Witness::Triple),
        triples_checked: match failing {
            // triples strictly before the witness in lexicographic order, plus the witness
            Some(t) => triple_rank(n, t) + 1,
            None => n * (n - 1) * (n - 2) / 6,
        },
        colors: c.num_colors(),
    })
}

/// Position of `t` among all 3-subsets of `0..n` in lexicographic order.
fn triple_rank(n: usize, [a, b, c]: [usize; 3]) -> usize {
    let choose2 = |x: usize| x * x.saturating_sub(1) / 2;
    let choose3 = |x: usize| x * x.saturating_sub(1) * x.saturating_sub(2) / 6;
    let before_a = choose3(n) - choose3(n - a);
    let rest = n - a - 1;
    let before_b = choose2(rest) - choose2(n - b);
    before_a + before_b + (c - b - 1)
}

/// Checks a certificate against the coloring: paths are `v`–D paths, `P1` is a
/// leg, the paths are internally disjoint, their union is rainbow, and the stored
/// color sets match the coloring.
pub fn verify_certificate(g: &Graph, c: &EdgeColoring, d: &[usize], cert: &SafetyCertificate) -> bool {
    certificate_problem(g, c, d, cert).is_none()
}

/// The first thing wrong with `cert`, if any.
pub fn certificate_problem(g: &Graph, c: &EdgeColoring, d: &[usize], cert: &SafetyCertificate) -> Option<String> {
    let n = g.n();
    let v = cert.vertex;
    if v >= n || d.iter().any(|&x| x >= n) {
        return Some("vertex out of range".into());
    }
    let in_d = membership(n, d);
    if in_d[v] {
        return Some(format!("vertex {v} is in D"));
    }
    if cert.paths[0].len() != 2 {
        return Some("first path is not a single edge".into());
    }
    let mut inner_owner = vec![usize::MAX; n];
    let mut colors = Vec::new();
    for (i, path) in cert.paths.iter().enumerate() {
        if path.len() < 2 || path[0] != v {
            return Some(format!("path {} does not start at {v}", i + 1));
        }
        let last = *path.last().unwrap();
        if last >= n || !in_d[last] {
            return Some(format!("path {} does not end in D", i + 1));
        }
        for &x in &path[1..path.len() - 1] {
            if x >= n || in_d[x] || x == v {
                return Some(format!("path {} has an inner vertex in D or repeats {v}", i + 1));
            }
            if inner_owner[x] != usize::MAX {
                return Some(format!("paths share inner vertex {x}"));
            }
            inner_owner[x] = i;
        }
        let mut set = Vec::new();
        for w in path.windows(2) {
            match g.edge_id(w[0], w[1]) {
                Some(e) if e < c.len() => set.push(c.color(e)),
                _ => return Some(format!("({}, {}) is not a colored edge", w[0], w[1])),
            }
        }
        set.sort_unstable();
        if cert.color_sets[i] != set {
            return Some(format!("stored color set of path {} is stale", i + 1));
        }
        colors.extend(set);
    }
    colors.sort_unstable();
    if colors.windows(2).any(|w| w[0] == w[1]) {
        return Some("union of the paths repeats a color".into());
    }
    None
}
