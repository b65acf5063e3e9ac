//! Every upper bound on `rx_3` the library can certify for one graph, next to
//! the Steiner-diameter lower bound.

use serde::Serialize;

use crate::coloring::inner_coloring;
use crate::domination::{
    cds_heuristic, connected_k_dominating_heuristic, min_connected_dominating_set_with,
    min_connected_k_dominating_set_with, three_way_dominating_set_with, DominatingSet, Provenance,
    DEFAULT_EXACT_LIMIT,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::steiner::sdiam3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaC {
    pub value: usize,
    pub provenance: Provenance,
}

/// `|D| `-based bound `d + extra`, where `d` colors `G[D]` 3-rainbow.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetBound {
    pub value: usize,
    pub set: Vec<usize>,
    pub d: usize,
    /// Whether `d` is the exact 3-rainbow index of `G[D]`.
    pub d_optimal: bool,
    pub provenance: Provenance,
    /// Whether the library can build a coloring achieving `value`.
    pub constructed: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorollaryBounds {
    /// `γ_c + 5`, when `δ ≥ 3`.
    pub gamma_c_plus_5: Option<usize>,
    pub gamma_c_n1_n2_plus_5: usize,
    /// `⌊3n/4⌋ + 3` (δ = 3), `⌊(3n + 17)/5⌋` (δ = 4), `⌊n/2⌋ + 3` (δ ≥ 5).
    pub min_degree_linear: Option<usize>,
    /// `n ln(δ+1)/(δ+1) + 5` without the `1 + o(1)` factor; not a certified
    /// bound, so it never enters `best`.
    pub asymptotic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub n1: usize,
    pub n2: usize,
    pub gamma_c: GammaC,
    pub sdiam3: usize,
    /// `d + 3` over a connected 3-dominating set.
    pub bound_a: SetBound,
    /// `d + 4` over a connected 2-dominating set; needs `δ ≥ 3`.
    pub bound_b: Option<SetBound>,
    /// `d + 6` over a connected three-way dominating set.
    pub bound_c: SetBound,
    pub corollary_bounds: CorollaryBounds,
    pub best: usize,
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    bounds_report_with(g, DEFAULT_EXACT_LIMIT)
}

fn set_bound(g: &Graph, d: &DominatingSet, extra: usize, constructed: bool, note: Option<&str>) -> Result<SetBound> {
    let inner = inner_coloring(g, d.vertices(), 0)?;
    Ok(SetBound {
        value: inner.d + extra,
        set: d.vertices().to_vec(),
        d: inner.d,
        d_optimal: inner.optimal,
        provenance: d.provenance(),
        constructed,
        note: note.map(str::to_string),
    })
}

fn k_dominating(g: &Graph, k: usize, limit: usize) -> Result<DominatingSet> {
    if g.n() <= limit {
        if let Some(d) = min_connected_k_dominating_set_with(g, k, limit)? {
            return Ok(d);
        }
    }
    connected_k_dominating_heuristic(g, k)
}

/// Dominating sets are minimum when `G` has at most `limit` vertices and
/// heuristic beyond; provenance flags say which.
pub fn bounds_report_with(g: &Graph, limit: usize) -> Result<BoundsReport> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let (sd, _) = sdiam3(g)?;
    let degrees = g.degrees();
    let delta = g.min_degree();
    let n1 = degrees.iter().filter(|&&d| d == 1).count();
    let n2 = degrees.iter().filter(|&&d| d == 2).count();

    let cds = if n <= limit {
        min_connected_dominating_set_with(g, limit)?
    } else {
        cds_heuristic(g)?
    };
    let gamma_c = GammaC {
        value: cds.len(),
        provenance: cds.provenance(),
    };

    let bound_a = set_bound(g, &k_dominating(g, 3, limit)?, 3, true, None)?;
    let bound_b = if delta >= 3 {
        Some(set_bound(
            g,
            &k_dominating(g, 2, limit)?,
            4,
            false,
            Some("cited, not constructed"),
        )?)
    } else {
        None
    };
    let bound_c = set_bound(g, &three_way_dominating_set_with(g, limit)?, 6, true, None)?;

    let corollary_bounds = CorollaryBounds {
        gamma_c_plus_5: (delta >= 3).then_some(gamma_c.value + 5),
        gamma_c_n1_n2_plus_5: gamma_c.value + n1 + n2 + 5,
        min_degree_linear: match delta {
            0..=2 => None,
            3 => Some(3 * n / 4 + 3),
            4 => Some((3 * n + 17) / 5),
            _ => Some(n / 2 + 3),
        },
        asymptotic: (delta >= 1).then(|| {
            let d1 = (delta + 1) as f64;
            n as f64 * d1.ln() / d1 + 5.0
        }),
    };

    let best = [
        Some(bound_a.value),
        bound_b.as_ref().map(|b| b.value),
        Some(bound_c.value),
        corollary_bounds.gamma_c_plus_5,
        Some(corollary_bounds.gamma_c_n1_n2_plus_5),
        corollary_bounds.min_degree_linear,
    ]
    .into_iter()
    .flatten()
    .min()
    .expect("bound_a is always present");

    Ok(BoundsReport {
        n,
        m: g.m(),
        delta,
        n1,
        n2,
        gamma_c,
        sdiam3: sd,
        bound_a,
        bound_b,
        bound_c,
        corollary_bounds,
        best,
    })
}
