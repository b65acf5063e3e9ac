//! Dominating-set variants: recognition, exact minimum search by subset
//! enumeration, and a many-leaf spanning tree heuristic.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{membership, EdgeId, Graph};

/// Exact searches refuse graphs with more vertices than this unless overridden.
pub const DEFAULT_EXACT_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DomKind {
    Plain,
    Connected,
    /// Dominating, and every outside vertex has degree at least `k` in `G`.
    KWay(usize),
    /// Every outside vertex has at least `k` neighbors inside the set.
    KDominating(usize),
    ConnectedKWay(usize),
    ConnectedKDominating(usize),
}

impl DomKind {
    fn connected(self) -> bool {
        matches!(
            self,
            DomKind::Connected | DomKind::ConnectedKWay(_) | DomKind::ConnectedKDominating(_)
        )
    }
}

impl std::fmt::Display for DomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomKind::Plain => write!(f, "dominating set"),
            DomKind::Connected => write!(f, "connected dominating set"),
            DomKind::KWay(k) => write!(f, "{k}-way dominating set"),
            DomKind::KDominating(k) => write!(f, "{k}-dominating set"),
            DomKind::ConnectedKWay(k) => write!(f, "connected {k}-way dominating set"),
            DomKind::ConnectedKDominating(k) => write!(f, "connected {k}-dominating set"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    Exact,
    Heuristic,
    UserSupplied,
}

/// A vertex set verified to have the property named by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingSet {
    vertices: Vec<usize>,
    kind: DomKind,
    provenance: Provenance,
}

impl DominatingSet {
    /// Validates `vertices` against `kind`; the set is stored sorted.
    pub fn new(g: &Graph, vertices: &[usize], kind: DomKind, provenance: Provenance) -> Result<Self> {
        let mut vertices = vertices.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange { u: v, v, n: g.n() });
        }
        if !check_domination(g, &vertices, kind) {
            return Err(Error::NotDominating(kind.to_string()));
        }
        Ok(DominatingSet {
            vertices,
            kind,
            provenance,
        })
    }

    pub fn user_supplied(g: &Graph, vertices: &[usize], kind: DomKind) -> Result<Self> {
        DominatingSet::new(g, vertices, kind, Provenance::UserSupplied)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn kind(&self) -> DomKind {
        self.kind
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Re-checks the set against a stronger or different property.
    pub fn satisfies(&self, g: &Graph, kind: DomKind) -> bool {
        check_domination(g, &self.vertices, kind)
    }
}

/// Legs of `v`: its edges into `d`, as `(foot, edge)` ascending by foot.
pub fn legs(g: &Graph, in_d: &[bool], v: usize) -> Vec<(usize, EdgeId)> {
    g.incident(v).filter(|&(u, _)| in_d[u]).collect()
}

pub fn check_domination(g: &Graph, d: &[usize], kind: DomKind) -> bool {
    let n = g.n();
    if d.iter().any(|&v| v >= n) {
        return false;
    }
    let inside = membership(n, d);
    let ok = (0..n).filter(|&v| !inside[v]).all(|v| {
        let feet = g.neighbors(v).iter().filter(|&&u| inside[u]).count();
        match kind {
            DomKind::Plain | DomKind::Connected => feet >= 1,
            DomKind::KWay(k) | DomKind::ConnectedKWay(k) => feet >= 1 && g.degree(v) >= k,
            DomKind::KDominating(k) | DomKind::ConnectedKDominating(k) => feet >= k,
        }
    });
    ok && (!kind.connected() || (!d.is_empty() && g.induces_connected(d)))
}

/// Bitmask view of a graph with at most 64 vertices.
struct MaskGraph {
    n: usize,
    adj: Vec<u64>,
    degree: Vec<usize>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
            .collect();
        MaskGraph {
            n: g.n(),
            adj,
            degree: g.degrees(),
        }
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut seen = set & set.wrapping_neg();
        loop {
            let mut grow = seen;
            let mut rest = seen;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow |= self.adj[v] & set;
            }
            if grow == seen {
                return seen == set;
            }
            seen = grow;
        }
    }

    fn accepts(&self, set: u64, kind: DomKind) -> bool {
        let mut outside = self.full() & !set;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let feet = (self.adj[v] & set).count_ones() as usize;
            let ok = match kind {
                DomKind::Plain | DomKind::Connected => feet >= 1,
                DomKind::KWay(k) | DomKind::ConnectedKWay(k) => feet >= 1 && self.degree[v] >= k,
                DomKind::KDominating(k) | DomKind::ConnectedKDominating(k) => feet >= k,
            };
            if !ok {
                return false;
            }
        }
        !kind.connected() || self.connected(set)
    }
}

/// Smallest vertex set with property `kind`, enumerating subsets by size and
/// then lexicographically; the first hit is returned.
pub fn min_dominating_set_exact(g: &Graph, kind: DomKind, limit: usize) -> Result<Option<DominatingSet>> {
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "exact enumeration vertex",
            actual: n,
            limit,
        });
    }
    if n == 0 {
        return Ok(None);
    }
    let mg = MaskGraph::new(g);
    for size in 1..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            if mg.accepts(set, kind) {
                let ds = DominatingSet::new(g, &idx, kind, Provenance::Exact)?;
                return Ok(Some(ds));
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

pub fn min_connected_dominating_set(g: &Graph) -> Result<DominatingSet> {
    min_connected_dominating_set_with(g, DEFAULT_EXACT_LIMIT)
}

pub fn min_connected_dominating_set_with(g: &Graph, limit: usize) -> Result<DominatingSet> {
    ensure_connected(g)?;
    min_dominating_set_exact(g, DomKind::Connected, limit)?.ok_or(Error::NotDominating(DomKind::Connected.to_string()))
}

/// Smallest connected `k`-dominating set, or `None` when no set qualifies.
pub fn min_connected_k_dominating_set(g: &Graph, k: usize) -> Result<Option<DominatingSet>> {
    min_connected_k_dominating_set_with(g, k, DEFAULT_EXACT_LIMIT)
}

pub fn min_connected_k_dominating_set_with(g: &Graph, k: usize, limit: usize) -> Result<Option<DominatingSet>> {
    if g.n() == 0 || !g.is_connected() {
        return Ok(None);
    }
    min_dominating_set_exact(g, DomKind::ConnectedKDominating(k), limit)
}

fn ensure_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices(0));
    }
    let seen = g.reach(0, |_| true);
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(Error::Disconnected(0, v)),
        None => Ok(()),
    }
}

/// Non-leaf vertices of a greedily grown spanning tree: start from a maximum
/// degree vertex, then repeatedly expand the tree leaf with the most neighbors
/// outside the tree.
pub fn cds_heuristic(g: &Graph) -> Result<DominatingSet> {
    ensure_connected(g)?;
    let n = g.n();
    if n == 1 {
        return DominatingSet::new(g, &[0], DomKind::Connected, Provenance::Heuristic);
    }
    let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    let mut in_tree = vec![false; n];
    let mut expanded = vec![false; n];
    let mut tree_size = 1;
    in_tree[root] = true;
    let mut frontier = vec![root];
    while tree_size < n {
        // leaf of the tree whose expansion adds the most new vertices
        let (_, pick) = frontier
            .iter()
            .filter(|&&v| !expanded[v])
            .map(|&v| {
                let gain = g.neighbors(v).iter().filter(|&&u| !in_tree[u]).count();
                (gain, v)
            })
            .max_by_key(|&(gain, v)| (gain, std::cmp::Reverse(v)))
            .expect("connected graph always has an expandable leaf");
        expanded[pick] = true;
        for &u in g.neighbors(pick) {
            if !in_tree[u] {
                in_tree[u] = true;
                tree_size += 1;
                frontier.push(u);
            }
        }
    }
    let set: Vec<usize> = (0..n).filter(|&v| expanded[v]).collect();
    DominatingSet::new(g, &set, DomKind::Connected, Provenance::Heuristic)
}

/// Connected dominating set (exact within `limit`, heuristic beyond) grown until
/// every outside vertex has at least `k` feet. Always succeeds on a connected
/// graph since the full vertex set qualifies.
pub fn connected_k_dominating_heuristic(g: &Graph, k: usize) -> Result<DominatingSet> {
    let base = cds_heuristic(g)?;
    let mut inside = membership(g.n(), base.vertices());
    loop {
        let deficient = (0..g.n()).find(|&v| {
            !inside[v] && g.neighbors(v).iter().filter(|&&u| inside[u]).count() < k
        });
        match deficient {
            Some(v) => inside[v] = true,
            None => break,
        }
    }
    let set: Vec<usize> = (0..g.n()).filter(|&v| inside[v]).collect();
    DominatingSet::new(g, &set, DomKind::ConnectedKDominating(k), Provenance::Heuristic)
}

/// Adds the interior vertices of shortest paths until `G[set]` is connected.
fn reconnect(g: &Graph, inside: &mut [bool]) {
    loop {
        let set: Vec<usize> = (0..g.n()).filter(|&v| inside[v]).collect();
        let Some(&first) = set.first() else { return };
        let comp = g.reach(first, |v| inside[v]);
        if set.iter().all(|&v| comp[v]) {
            return;
        }
        // multi-source BFS from the first component to any other set vertex
        let mut prev = vec![usize::MAX; g.n()];
        let mut seen = comp.clone();
        let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| comp[v]).collect();
        let mut hit = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if seen[u] {
                    continue;
                }
                seen[u] = true;
                prev[u] = v;
                if inside[u] {
                    hit = Some(u);
                    break 'bfs;
                }
                queue.push_back(u);
            }
        }
        let mut x = prev[hit.expect("graph is connected")];
        while !comp[x] {
            inside[x] = true;
            x = prev[x];
        }
    }
}

/// Connected dominating set plus every vertex of degree 1 or 2, which makes it
/// connected three-way dominating.
pub fn three_way_dominating_set(g: &Graph) -> Result<DominatingSet> {
    three_way_dominating_set_with(g, DEFAULT_EXACT_LIMIT)
}

pub fn three_way_dominating_set_with(g: &Graph, limit: usize) -> Result<DominatingSet> {
    ensure_connected(g)?;
    let base = if g.n() <= limit {
        min_connected_dominating_set_with(g, limit)?
    } else {
        cds_heuristic(g)?
    };
    let mut inside = membership(g.n(), base.vertices());
    for v in 0..g.n() {
        if g.degree(v) < 3 {
            inside[v] = true;
        }
    }
    reconnect(g, &mut inside);
    let set: Vec<usize> = (0..g.n()).filter(|&v| inside[v]).collect();
    if base.provenance() == Provenance::Exact {
        let low = (0..g.n()).filter(|&v| g.degree(v) < 3).count();
        debug_assert!(set.len() <= base.len() + low);
    }
    DominatingSet::new(g, &set, DomKind::ConnectedKWay(3), base.provenance())
}

/// Greedy left-to-right sweep over an interval representation: repeatedly take,
/// among intervals starting no later than the covered right end, the one reaching
/// furthest right. Returns interval indices forming a dominating path.
pub fn interval_dominating_path(intervals: &[(f64, f64)]) -> Result<Vec<usize>> {
    if intervals.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(i) = intervals.iter().position(|&(lo, hi)| !(lo <= hi)) {
        return Err(Error::InvalidParameters(format!("interval {i} has lo > hi")));
    }
    let mut by_start: Vec<usize> = (0..intervals.len()).collect();
    by_start.sort_by(|&a, &b| intervals[a].0.total_cmp(&intervals[b].0).then(a.cmp(&b)));

    let leftmost_end = intervals.iter().map(|iv| iv.1).fold(f64::INFINITY, f64::min);
    let mut reach = leftmost_end;
    let mut path = Vec::new();
    let mut cursor = 0;
    let mut best: Option<usize> = None;
    loop {
        while cursor < by_start.len() && intervals[by_start[cursor]].0 <= reach {
            let i = by_start[cursor];
            if best.map_or(true, |b| intervals[i].1 > intervals[b].1) {
                best = Some(i);
            }
            cursor += 1;
        }
        let pick = best.unwrap();
        if path.last() != Some(&pick) {
            path.push(pick);
        }
        reach = intervals[pick].1;
        if cursor == by_start.len() {
            return Ok(path);
        }
        if intervals[by_start[cursor]].0 > reach {
            return Err(Error::IntervalGap(pick));
        }
    }
}
