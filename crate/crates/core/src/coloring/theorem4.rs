//! Three extra colors over a connected 3-dominating set: every outside vertex
//! gets legs colored 1, 2 and 3, so any outside vertex reaches D by a single
//! edge of whichever of the three colors is still free.

use serde::Serialize;

use crate::domination::{check_domination, legs, DomKind, DominatingSet};
use crate::error::{Error, Result};
use crate::graph::{membership, Graph};

use super::{inner_coloring, EdgeColoring};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem4Report {
    pub dominating_set: Vec<usize>,
    /// Colors used inside `G[D]`.
    pub d: usize,
    pub inner_optimal: bool,
    pub total_colors: usize,
}

/// Legs of each outside vertex get 1, 2, then 3 for the rest (by ascending
/// foot); `G[D]` gets colors `4..=d+3`; edges between outside vertices get 1.
pub fn theorem4_coloring(g: &Graph, d: &DominatingSet) -> Result<(EdgeColoring, Theorem4Report)> {
    let kind = DomKind::ConnectedKDominating(3);
    if !check_domination(g, d.vertices(), kind) {
        return Err(Error::NotDominating(kind.to_string()));
    }
    let in_d = membership(g.n(), d.vertices());
    let mut colors = vec![1u32; g.m()];
    for v in (0..g.n()).filter(|&v| !in_d[v]) {
        for (i, (_, e)) in legs(g, &in_d, v).into_iter().enumerate() {
            colors[e] = (i as u32 + 1).min(3);
        }
    }
    let inner = inner_coloring(g, d.vertices(), 3)?;
    for &(e, c) in &inner.assignment {
        colors[e] = c;
    }
    let coloring = EdgeColoring::new(g, colors)?;
    let report = Theorem4Report {
        dominating_set: d.vertices().to_vec(),
        d: inner.d,
        inner_optimal: inner.optimal,
        total_colors: coloring.num_colors(),
    };
    Ok((coloring, report))
}
