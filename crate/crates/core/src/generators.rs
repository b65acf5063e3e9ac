//! Deterministic graph families: basic families, the extremal chain `G*`, the
//! threshold / chain / windmill examples, interval graphs and seeded random
//! graphs with a minimum degree.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A generated graph with names for its distinguished vertices.
#[derive(Debug, Clone, Serialize)]
pub struct LabeledGraph {
    #[serde(skip)]
    pub graph: Graph,
    pub family: String,
    pub labels: BTreeMap<String, usize>,
}

impl LabeledGraph {
    fn new(graph: Graph, family: impl Into<String>) -> Self {
        LabeledGraph {
            graph,
            family: family.into(),
            labels: BTreeMap::new(),
        }
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.get(name).copied()
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generator edges are valid")
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, &e)
}

/// Sides `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let e: Vec<_> = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))).collect();
    build(s + t, &e)
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &e))
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &e)
}

/// `m` copies of `K_{δ+1}` chained between two copies of `K_{δ+2}`. Blocks are
/// numbered `X_0..X_{m+1}` in chain order and vertices `x_{i,1}, x_{i,2}, ...`
/// within a block; `x_{i,2}` is joined to `x_{i+1,1}` and every edge
/// `x_{i,1} x_{i,2}` is removed.
pub fn gstar(delta: usize, m: usize) -> Result<LabeledGraph> {
    if delta < 3 {
        return Err(invalid(format!("gstar needs delta >= 3, got {delta}")));
    }
    let sizes: Vec<usize> = (0..m + 2)
        .map(|i| if i == 0 || i == m + 1 { delta + 2 } else { delta + 1 })
        .collect();
    let starts: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let mut edges = Vec::new();
    for (i, (&s, &size)) in starts.iter().zip(&sizes).enumerate() {
        for a in 0..size {
            for b in a + 1..size {
                if (a, b) != (0, 1) {
                    edges.push((s + a, s + b));
                }
            }
        }
        if i + 1 < sizes.len() {
            edges.push((s + 1, starts[i + 1]));
        }
    }
    let mut lg = LabeledGraph::new(build(n, &edges), format!("gstar(delta={delta}, m={m})"));
    for (i, (&s, &size)) in starts.iter().zip(&sizes).enumerate() {
        for j in 0..size {
            lg.labels.insert(format!("x{i},{}", j + 1), s + j);
        }
    }
    Ok(lg)
}

/// `x_1..x_t` (ids `0..t`) each joined to the triangle `y_1, y_2, y_3`
/// (ids `t..t+3`).
pub fn threshold_example(t: usize) -> Result<LabeledGraph> {
    if t < 1 {
        return Err(invalid("threshold_example needs t >= 1"));
    }
    let mut edges = vec![(t, t + 1), (t, t + 2), (t + 1, t + 2)];
    for x in 0..t {
        for y in t..t + 3 {
            edges.push((x, y));
        }
    }
    let mut lg = LabeledGraph::new(build(t + 3, &edges), format!("threshold_example(t={t})"));
    for i in 0..t {
        lg.labels.insert(format!("x{}", i + 1), i);
    }
    for j in 0..3 {
        lg.labels.insert(format!("y{}", j + 1), t + j);
    }
    Ok(lg)
}

/// Bipartite chain graph with `A = a_1..a_k` (ids `0..k`) and `B = b_1..b_t`
/// (ids `k..k+t`): `a_1..a_{k-3}` see `b_1, b_2, b_3`; the last three `a`s see
/// all of `B`.
pub fn chain_example(k: usize, t: usize) -> Result<LabeledGraph> {
    if k < 4 || t < 4 {
        return Err(invalid(format!("chain_example needs k >= 4 and t >= 4, got k={k}, t={t}")));
    }
    let mut edges = Vec::new();
    for a in 0..k {
        let reach = if a + 3 < k { 3 } else { t };
        for b in 0..reach {
            edges.push((a, k + b));
        }
    }
    let mut lg = LabeledGraph::new(build(k + t, &edges), format!("chain_example(k={k}, t={t})"));
    for i in 0..k {
        lg.labels.insert(format!("a{}", i + 1), i);
    }
    for j in 0..t {
        lg.labels.insert(format!("b{}", j + 1), k + j);
    }
    Ok(lg)
}

/// `t` copies of `K_4` sharing the hub `v_0 = 0`; block `i` is
/// `u_i, v_i, w_i = 3i-2, 3i-1, 3i`.
pub fn french_windmill(t: usize) -> Result<LabeledGraph> {
    if t < 1 {
        return Err(invalid("french_windmill needs t >= 1"));
    }
    let mut edges = Vec::new();
    for i in 1..=t {
        let block = [0, 3 * i - 2, 3 * i - 1, 3 * i];
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((block[a], block[b]));
            }
        }
    }
    let mut lg = LabeledGraph::new(build(3 * t + 1, &edges), format!("french_windmill(t={t})"));
    lg.labels.insert("v0".into(), 0);
    for i in 1..=t {
        lg.labels.insert(format!("u{i}"), 3 * i - 2);
        lg.labels.insert(format!("v{i}"), 3 * i - 1);
        lg.labels.insert(format!("w{i}"), 3 * i);
    }
    Ok(lg)
}

/// Edge `uv` iff `w(u) + w(v) >= threshold`.
pub fn threshold_from_weights(weights: &[f64], threshold: f64) -> Graph {
    let n = weights.len();
    let e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| weights[u] + weights[v] >= threshold)
        .collect();
    build(n, &e)
}

/// Intersection graph of closed intervals.
pub fn interval_graph(intervals: &[(f64, f64)]) -> Graph {
    let n = intervals.len();
    let e: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| {
            let (a, b) = (intervals[u], intervals[v]);
            a.0.max(b.0) <= a.1.min(b.1)
        })
        .collect();
    build(n, &e)
}

/// Connected graph with minimum degree at least `delta`, reproducible from
/// `seed`: a sparse random graph, then deficient vertices joined to random
/// non-neighbors, then components chained together.
pub fn random_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if n < delta + 1 {
        return Err(invalid(format!("need n >= delta + 1, got n={n}, delta={delta}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![false; n]; n];
    let p = if n > 1 { (delta as f64 / (n - 1) as f64).min(1.0) } else { 0.0 };
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    for u in 0..n {
        let mut deg = adj[u].iter().filter(|&&x| x).count();
        if deg >= delta {
            continue;
        }
        let mut others: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u][v]).collect();
        others.shuffle(&mut rng);
        for v in others {
            if deg >= delta {
                break;
            }
            adj[u][v] = true;
            adj[v][u] = true;
            deg += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u][v])
        .collect();
    let g = build(n, &edges);
    let comps = crate::graph::components_minus(&g, &[]);
    for pair in comps.windows(2) {
        let u = *pair[0].choose(&mut rng).unwrap();
        let v = *pair[1].choose(&mut rng).unwrap();
        edges.push((u, v));
    }
    Ok(build(n, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steiner::all_pairs_distances;

    #[test]
    fn standard_family_sizes() {
        assert_eq!(complete(4).m(), 6);
        assert_eq!(complete_bipartite(3, 3).m(), 9);
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.m(), 6);
        assert!(c6.degrees().iter().all(|&d| d == 2));
        assert_eq!(star(3).degree(0), 3);
    }

    #[test]
    fn gstar_sizes_and_diameter() {
        let g = gstar(3, 1).unwrap().graph;
        assert_eq!(g.n(), 14);
        assert_eq!(g.min_degree(), 3);
        assert_eq!(all_pairs_distances(&g).unwrap().diameter(), 8);
        assert_eq!(gstar(3, 0).unwrap().graph.n(), 10);
        let g42 = gstar(4, 2).unwrap().graph;
        assert_eq!(g42.n(), 22);
        assert_eq!(g42.min_degree(), 4);
        assert!(gstar(2, 1).is_err());
    }

    #[test]
    fn threshold_example_formulas() {
        let lg = threshold_example(5).unwrap();
        assert_eq!((lg.graph.n(), lg.graph.m()), (8, 18));
        for i in 1..=5 {
            assert_eq!(lg.graph.degree(lg.label(&format!("x{i}")).unwrap()), 3);
        }
        let weights: Vec<f64> = (0..8).map(|v| if v >= 5 { 1.0 } else { 0.0 }).collect();
        assert_eq!(threshold_from_weights(&weights, 1.0), lg.graph);
    }

    #[test]
    fn chain_example_is_nested() {
        let lg = chain_example(6, 10).unwrap();
        let g = &lg.graph;
        assert_eq!(g.n(), 16);
        assert_eq!(g.min_degree(), 3);
        for a in 1..6 {
            let prev = g.neighbors(a - 1);
            assert!(prev.iter().all(|b| g.neighbors(a).contains(b)));
        }
    }

    #[test]
    fn windmill_formulas() {
        let g = french_windmill(3).unwrap().graph;
        assert_eq!((g.n(), g.m()), (10, 18));
        assert_eq!(g.min_degree(), 3);
        let g2 = french_windmill(2).unwrap().graph;
        assert_eq!(all_pairs_distances(&g2).unwrap().diameter(), 2);
    }

    #[test]
    fn weights_examples() {
        let g = threshold_from_weights(&[1.0, 1.0, 1.0, 0.0, 0.0], 1.0);
        assert_eq!(g.m(), 3 + 6);
        assert_eq!(threshold_from_weights(&[1.0, 2.0], 5.0).m(), 0);
    }

    #[test]
    fn random_min_degree_examples() {
        let a = random_min_degree(10, 3, 7).unwrap();
        assert!(a.is_connected() && a.min_degree() >= 3);
        assert_eq!(a, random_min_degree(10, 3, 7).unwrap());
        assert_eq!(random_min_degree(4, 3, 1).unwrap(), complete(4));
        assert!(random_min_degree(30, 5, 42).unwrap().min_degree() >= 5);
        assert!(random_min_degree(3, 3, 0).is_err());
    }
}
