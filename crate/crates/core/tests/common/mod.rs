//! Shared corpus and brute-force oracles for the integration tests.
#![allow(dead_code)]

use rainbow3::generators::*;
use rainbow3::{EdgeColoring, Graph};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The seeded random corpus: 200 connected graphs with `δ ≥ 3` and
/// `4 ≤ n ≤ 30`, `δ` cycling through 3, 4, 5 where `n` allows it.
pub fn random_corpus() -> Vec<(u64, Graph)> {
    (0..200u64)
        .map(|seed| {
            let n = 4 + (seed as usize % 27);
            let delta = (3 + (seed as usize / 27) % 3).min(n - 1);
            (seed, random_min_degree(n, delta, seed).unwrap())
        })
        .collect()
}

/// `G(n, p)` conditioned on connectivity by retrying with the next draw.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect::<Vec<_>>();
        let g = Graph::new(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Named families and random graphs, all connected, with `3 ≤ n ≤ 8`.
pub fn small_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=8 {
        out.push((format!("K{n}"), complete(n)));
        out.push((format!("P{n}"), path(n)));
        out.push((format!("C{n}"), cycle(n).unwrap()));
        out.push((format!("star{}", n - 1), star(n - 1)));
    }
    for s in 1..=4 {
        for t in s..=(8 - s) {
            if s + t >= 3 {
                out.push((format!("K{s},{t}"), complete_bipartite(s, t)));
            }
        }
    }
    for t in 1..=5 {
        out.push((format!("threshold({t})"), threshold_example(t).unwrap().graph));
    }
    out.push(("chain(4,4)".into(), chain_example(4, 4).unwrap().graph));
    for t in 1..=2 {
        out.push((format!("windmill({t})"), french_windmill(t).unwrap().graph));
    }
    out.push((
        "interval".into(),
        interval_graph(&[(0.0, 2.0), (1.0, 3.0), (2.5, 4.0), (3.5, 6.0), (0.5, 5.0), (5.5, 7.0)]),
    ));
    for seed in 0..12 {
        let n = 4 + seed as usize % 5;
        out.push((format!("mindeg({n}, 3, {seed})"), random_min_degree(n, 3, seed).unwrap()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..60 {
        let n = 3 + i % 6;
        let p = [0.3, 0.5, 0.7][i % 3];
        out.push((format!("gnp#{i}"), random_connected(n, p, &mut rng)));
    }
    out
}

/// Steiner distance by enumerating vertex sets: the smallest connected induced
/// subgraph containing `s` has `sd(s) + 1` vertices.
pub fn steiner_bruteforce(g: &Graph, s: [usize; 3]) -> usize {
    let n = g.n();
    let need = s.iter().fold(0u32, |m, &v| m | 1 << v);
    (0u32..1 << n)
        .filter(|&mask| mask & need == need)
        .filter(|&mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            g.induces_connected(&set)
        })
        .map(|mask| mask.count_ones() as usize - 1)
        .min()
        .expect("graph is connected")
}

/// Whether some set of edges with pairwise distinct colors connects `s`; a
/// spanning tree of such a set is a rainbow `s`-tree.
pub fn rainbow_tree_bruteforce(g: &Graph, c: &EdgeColoring, s: [usize; 3]) -> bool {
    let m = g.m();
    let k = c.num_colors().min(g.n() - 1);
    let mut chosen = Vec::new();
    subsets(g, c, s, 0, m, k, &mut chosen)
}

fn subsets(g: &Graph, c: &EdgeColoring, s: [usize; 3], from: usize, m: usize, k: usize, chosen: &mut Vec<usize>) -> bool {
    if connects(g, chosen, s) {
        return true;
    }
    if chosen.len() == k {
        return false;
    }
    for e in from..m {
        if chosen.iter().any(|&f| c.color(f) == c.color(e)) {
            continue;
        }
        chosen.push(e);
        if subsets(g, c, s, e + 1, m, k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn connects(g: &Graph, edges: &[usize], s: [usize; 3]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &e in edges {
        let (u, v) = g.edges()[e];
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let r = find(&mut parent, s[0]);
    find(&mut parent, s[1]) == r && find(&mut parent, s[2]) == r
}

pub fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

/// Random coloring with colors drawn from `1..=k`.
pub fn random_coloring(g: &Graph, k: u32, rng: &mut ChaCha8Rng) -> EdgeColoring {
    EdgeColoring::new(g, (0..g.m()).map(|_| rng.gen_range(1..=k)).collect()).unwrap()
}
