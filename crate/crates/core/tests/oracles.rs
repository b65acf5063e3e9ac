//! Library results against brute-force oracles on small graphs.

mod common;

use common::*;
use rainbow3::domination::{check_domination, min_dominating_set_exact, DomKind};
use rainbow3::steiner::{sdiam3, steiner_distance3};
use rainbow3::verify::exact::exact_rx3;
use rainbow3::verify::{exists_rainbow_s_tree, is_3_rainbow};
use rainbow3::{EdgeColoring, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn steiner_distance_matches_enumeration() {
    for (name, g) in small_corpus() {
        let mut best = 0;
        for s in triples(g.n()) {
            let want = steiner_bruteforce(&g, s);
            assert_eq!(steiner_distance3(&g, s).unwrap(), want, "{name} {s:?}");
            best = best.max(want);
        }
        assert_eq!(sdiam3(&g).unwrap().0, best, "{name}");
    }
}

#[test]
fn rainbow_dp_matches_subtree_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for i in 0..120 {
        let n = 3 + i % 5;
        let g = random_connected(n, [0.4, 0.6, 0.9][i % 3], &mut rng);
        for k in 1..=4 {
            let c = random_coloring(&g, k, &mut rng);
            let mut all = true;
            for s in triples(n) {
                let want = rainbow_tree_bruteforce(&g, &c, s);
                assert_eq!(exists_rainbow_s_tree(&g, &c, s).unwrap(), want, "{:?} {:?} {s:?}", g.edges(), c.colors());
                all &= want;
                checked += 1;
            }
            assert_eq!(is_3_rainbow(&g, &c).unwrap().verdict, all);
        }
    }
    assert!(checked > 1000);
}

#[test]
fn exact_dominating_sets_match_enumeration() {
    let kinds = [
        DomKind::Connected,
        DomKind::ConnectedKWay(3),
        DomKind::ConnectedKDominating(2),
        DomKind::ConnectedKDominating(3),
    ];
    for (name, g) in small_corpus() {
        let n = g.n();
        for kind in kinds {
            let want = (1u32..1 << n)
                .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
                .filter(|set| check_domination(&g, set, kind))
                .map(|set| set.len())
                .min();
            let got = min_dominating_set_exact(&g, kind, 24).unwrap();
            assert_eq!(got.as_ref().map(|d| d.len()), want, "{name} {kind}");
            if let Some(d) = got {
                assert!(check_domination(&g, d.vertices(), kind));
            }
        }
    }
}

/// Smallest `k` such that some coloring with colors `1..=k` is 3-rainbow, by
/// trying every coloring.
fn rx3_bruteforce(g: &Graph) -> usize {
    let m = g.m() as u32;
    for k in 1..=m {
        let total = (k as u64).pow(m);
        let found = (0..total).any(|mut code| {
            let colors: Vec<u32> = (0..m)
                .map(|_| {
                    let c = (code % k as u64) as u32 + 1;
                    code /= k as u64;
                    c
                })
                .collect();
            let c = EdgeColoring::new(g, colors).unwrap();
            triples(g.n()).all(|s| rainbow_tree_bruteforce(g, &c, s))
        });
        if found {
            return k as usize;
        }
    }
    unreachable!("a coloring with m distinct colors is 3-rainbow")
}

#[test]
fn exact_rx3_matches_exhaustive_colorings() {
    let cases: Vec<(String, Graph)> = small_corpus().into_iter().filter(|(_, g)| g.m() <= 7).collect();
    assert!(cases.len() >= 20);
    for (name, g) in cases {
        let want = rx3_bruteforce(&g);
        assert_eq!(exact_rx3(&g, 8).unwrap(), Some(want), "{name}");
    }
}
