//! Six extra colors over a connected three-way dominating set.
//!
//! Every vertex outside D is made *safe*: it gets three internally disjoint
//! paths to D whose union is rainbow, recorded as a [`SafetyCertificate`].
//! Stage 1 colors the legs `e_v` and tree edges `f_v` of a BFS tree of each
//! component of `G - D` periodically by height, which makes every non-leaf safe.
//! Stage 2 makes the leaves safe one at a time: a spare leg if there is one,
//! otherwise an uncolored edge inside the component chosen and colored by the
//! dispatch table in [`super::table`]. Leftover edges get color 1 and `G[D]` gets
//! its own colors from 7 up.

use std::cmp::Reverse;

use serde::Serialize;

use crate::bfs::{bfs_tree, BfsTree, SubtreeType};
use crate::domination::{check_domination, legs, DomKind, DominatingSet};
use crate::error::{Error, Result};
use crate::graph::{components_minus, membership, EdgeId, Graph};
use crate::verify::classes::class_membership;
use crate::verify::certificate_problem;

use super::table::{lookup, Route};
use super::{inner_coloring, EdgeColoring, SafetyCertificate};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Theorem3Options {
    /// After every stage-2 step, re-check every stored certificate of the
    /// component and that no edge other than `e_w` changed color.
    pub check_each_step: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Theorem3Report {
    pub dominating_set: Vec<usize>,
    pub components: usize,
    /// Colors used inside `G[D]`.
    pub d: usize,
    pub inner_optimal: bool,
    pub total_colors: usize,
    /// Leaves made safe by a spare leg.
    pub spare_legs: usize,
    /// Leaves left for the dispatch table.
    pub dangerous: usize,
    /// Dangerous leaves already made safe by an earlier step.
    pub skipped: usize,
    /// Steps taken per case 1–4.
    pub case_counts: [usize; 4],
    /// Stage-2 steps re-checked (only with `check_each_step`).
    pub checked_steps: usize,
    pub safety_violations: usize,
    pub recolor_violations: usize,
    /// Final certificates that fail verification or fall outside Classes 0–6.
    pub certificate_failures: usize,
    pub unclassified: usize,
}

#[derive(Debug, Clone)]
pub struct Theorem3Output {
    pub coloring: EdgeColoring,
    /// One per vertex outside D, by ascending vertex.
    pub certificates: Vec<SafetyCertificate>,
    pub report: Theorem3Report,
}

/// Coloring state of one component of `G - D` after the periodic stage. Vectors
/// are indexed by global vertex and edge ids; entries outside the component are
/// empty.
#[derive(Debug, Clone)]
pub struct Stage1State {
    pub component: Vec<usize>,
    /// BFS tree, for components of three or more vertices.
    pub tree: Option<BfsTree>,
    /// The leg `e_v` of each vertex (to its smallest foot).
    pub leg: Vec<Option<EdgeId>>,
    /// Stage-1 color of `e_v`, to detect recoloring.
    pub leg_color: Vec<Option<u32>>,
    pub colors: Vec<Option<u32>>,
    pub flagged: Vec<bool>,
    /// Stored certificate paths of flagged vertices.
    pub paths: Vec<Option<[Vec<usize>; 3]>>,
    /// Leaves of the tree, which stage 1 leaves unsafe.
    pub dangerous: Vec<usize>,
}

impl Stage1State {
    fn foot(&self, g: &Graph, v: usize) -> usize {
        let (a, b) = g.edges()[self.leg[v].expect("vertex has a leg")];
        if a == v {
            b
        } else {
            a
        }
    }

    fn set(&mut self, g: &Graph, u: usize, v: usize, c: u32) {
        self.colors[g.edge_id(u, v).expect("edge")] = Some(c);
    }
}

/// `(f_v, e_v)` colors of a non-root vertex by subtree type and height.
fn periodic(kind: SubtreeType, h: usize) -> (u32, u32) {
    match (kind, h % 3) {
        (SubtreeType::TypeII, 0) => (4, 2),
        (SubtreeType::TypeII, 1) => (5, 3),
        (SubtreeType::TypeII, _) => (6, 1),
        (_, 0) => (6, 2),
        (_, 1) => (4, 1),
        (_, _) => (5, 3),
    }
}

fn diag(vertex: usize, detail: impl Into<String>) -> Error {
    Error::Diagnostic {
        vertex,
        detail: detail.into(),
    }
}

/// Stage 1 on one component of `G - D`: legs and tree edges colored
/// periodically; isolated vertices and edges handled directly.
pub fn stage1_periodic(g: &Graph, d: &[usize], component: &[usize]) -> Result<Stage1State> {
    let (n, m) = (g.n(), g.m());
    let in_d = membership(n, d);
    let mut st = Stage1State {
        component: component.to_vec(),
        tree: None,
        leg: vec![None; n],
        leg_color: vec![None; n],
        colors: vec![None; m],
        flagged: vec![false; n],
        paths: vec![None; n],
        dangerous: Vec::new(),
    };
    let feet = |v: usize| -> Vec<(usize, EdgeId)> { legs(g, &in_d, v) };
    for &v in component {
        st.leg[v] = Some(feet(v).first().ok_or_else(|| diag(v, "no leg into D"))?.1);
    }

    match component {
        [v] => {
            let f = feet(*v);
            if f.len() < 3 {
                return Err(diag(*v, "isolated vertex with fewer than three legs"));
            }
            for (i, &(_, e)) in f.iter().enumerate() {
                st.colors[e] = Some((i as u32 + 1).min(3));
            }
            st.paths[*v] = Some([vec![*v, f[0].0], vec![*v, f[1].0], vec![*v, f[2].0]]);
            st.flagged[*v] = true;
        }
        [u, v] => {
            let (fu, fv) = (feet(*u), feet(*v));
            for (x, f) in [(*u, &fu), (*v, &fv)] {
                if f.len() < 2 {
                    return Err(diag(x, "isolated edge endpoint with fewer than two legs"));
                }
            }
            for (i, &(_, e)) in fu.iter().enumerate() {
                st.colors[e] = Some(if i == 0 { 1 } else { 2 });
            }
            for (i, &(_, e)) in fv.iter().enumerate() {
                st.colors[e] = Some(if i == 0 { 2 } else { 3 });
            }
            st.set(g, *u, *v, 4);
            st.paths[*u] = Some([vec![*u, fu[0].0], vec![*u, fu[1].0], vec![*u, *v, fv[1].0]]);
            st.paths[*v] = Some([vec![*v, fv[0].0], vec![*v, fv[1].0], vec![*v, *u, fu[0].0]]);
            st.flagged[*u] = true;
            st.flagged[*v] = true;
        }
        _ => {
            let inside = membership(n, component);
            let root = *component
                .iter()
                .find(|&&v| g.neighbors(v).iter().filter(|&&u| inside[u]).count() >= 2)
                .ok_or_else(|| diag(component[0], "no vertex with two neighbors in the component"))?;
            let tree = bfs_tree(g, component, root)?;
            st.colors[st.leg[root].unwrap()] = Some(2);
            for &v in &tree.order()[1..] {
                let h = tree.height(v).unwrap();
                let (f, e) = periodic(tree.subtree_type(v).unwrap(), h);
                st.set(g, v, tree.parent(v).unwrap(), f);
                st.colors[st.leg[v].unwrap()] = Some(e);
            }
            let first = tree.first_level();
            let (v1, vk) = (first[0], *first.last().unwrap());
            st.paths[root] = Some([
                vec![root, st.foot(g, root)],
                vec![root, v1, st.foot(g, v1)],
                vec![root, vk, st.foot(g, vk)],
            ]);
            st.flagged[root] = true;
            for &v in &tree.order()[1..] {
                if tree.is_leaf(v) {
                    st.dangerous.push(v);
                } else {
                    let routes = [Route::Leg, Route::Up, Route::Down];
                    st.paths[v] = Some(resolve(g, &st, &tree, v, None, routes)?);
                    st.flagged[v] = true;
                }
            }
            st.tree = Some(tree);
        }
    }
    for &v in component {
        st.leg_color[v] = st.colors[st.leg[v].unwrap()];
    }
    Ok(st)
}

/// Concrete vertex sequences for three route shapes from `x`, with `y` the
/// other end of the new edge.
fn resolve(
    g: &Graph,
    st: &Stage1State,
    tree: &BfsTree,
    x: usize,
    y: Option<usize>,
    routes: [Route; 3],
) -> Result<[Vec<usize>; 3]> {
    let parent = |v: usize| tree.parent(v).ok_or_else(|| diag(v, "route needs a parent"));
    let other = || y.ok_or_else(|| diag(x, "route needs the other endpoint"));
    let one = |r: Route| -> Result<Vec<usize>> {
        Ok(match r {
            Route::Leg => vec![x, st.foot(g, x)],
            Route::Up => {
                let p = parent(x)?;
                vec![x, p, st.foot(g, p)]
            }
            Route::UpUp => {
                let p = parent(x)?;
                let pp = parent(p)?;
                vec![x, p, pp, st.foot(g, pp)]
            }
            Route::Down => {
                let c = *tree.children(x).first().ok_or_else(|| diag(x, "route needs a child"))?;
                vec![x, c, st.foot(g, c)]
            }
            Route::ViaOther => {
                let y = other()?;
                vec![x, y, st.foot(g, y)]
            }
            Route::ViaOtherUp => {
                let y = other()?;
                let p = parent(y)?;
                vec![x, y, p, st.foot(g, p)]
            }
        })
    };
    Ok([one(routes[0])?, one(routes[1])?, one(routes[2])?])
}

/// Processing order of the dangerous leaves: later first-level subtrees first,
/// then lower height, then BFS order.
pub fn order_dangerous(a: &[usize], tree: &BfsTree) -> Vec<usize> {
    let mut out = a.to_vec();
    out.sort_by_key(|&v| {
        (
            Reverse(tree.first_level_index(v)),
            tree.height(v),
            tree.rank(v),
        )
    });
    out
}

/// The six-color construction with inner colors from 7 up.
pub fn theorem3_coloring(g: &Graph, d: &DominatingSet) -> Result<Theorem3Output> {
    theorem3_coloring_with(g, d, Theorem3Options::default())
}

pub fn theorem3_coloring_with(g: &Graph, d: &DominatingSet, options: Theorem3Options) -> Result<Theorem3Output> {
    let kind = DomKind::ConnectedKWay(3);
    if !check_domination(g, d.vertices(), kind) {
        return Err(Error::NotDominating(kind.to_string()));
    }
    let (n, m) = (g.n(), g.m());
    let in_d = membership(n, d.vertices());
    let mut report = Theorem3Report {
        dominating_set: d.vertices().to_vec(),
        ..Theorem3Report::default()
    };
    let mut colors: Vec<Option<u32>> = vec![None; m];
    let mut paths: Vec<Option<[Vec<usize>; 3]>> = vec![None; n];

    let components = components_minus(g, d.vertices());
    report.components = components.len();
    for comp in &components {
        let mut st = stage1_periodic(g, d.vertices(), comp)?;
        if st.tree.is_some() {
            stage2(g, &in_d, d.vertices(), &mut st, options, &mut report)?;
        }
        for e in 0..m {
            if let Some(c) = st.colors[e] {
                colors[e] = Some(c);
            }
        }
        for &v in comp {
            paths[v] = st.paths[v].take();
        }
    }

    let mut full: Vec<u32> = colors.iter().map(|c| c.unwrap_or(1)).collect();
    let inner = inner_coloring(g, d.vertices(), 6)?;
    for &(e, c) in &inner.assignment {
        full[e] = c;
    }
    let coloring = EdgeColoring::new(g, full)?;
    report.d = inner.d;
    report.inner_optimal = inner.optimal;
    report.total_colors = coloring.num_colors();

    let mut certificates = Vec::new();
    for v in (0..n).filter(|&v| !in_d[v]) {
        let p = paths[v].take().ok_or_else(|| diag(v, "vertex left without a certificate"))?;
        let cert = SafetyCertificate::new(g, &coloring, v, p);
        if certificate_problem(g, &coloring, d.vertices(), &cert).is_some() {
            report.certificate_failures += 1;
        }
        if cert.color_sets.iter().flatten().any(|&c| c > 6) || class_membership(cert.set_triple()).is_none() {
            report.unclassified += 1;
        }
        certificates.push(cert);
    }
    Ok(Theorem3Output {
        coloring,
        certificates,
        report,
    })
}

fn stage2(
    g: &Graph,
    in_d: &[bool],
    d: &[usize],
    st: &mut Stage1State,
    options: Theorem3Options,
    report: &mut Theorem3Report,
) -> Result<()> {
    let tree = st.tree.take().expect("tree component");

    // spare legs
    for &v in &st.dangerous.clone() {
        let own = st.leg[v].unwrap();
        let Some(&(foot, e)) = legs(g, in_d, v).iter().find(|&&(_, e)| e != own && st.colors[e].is_none()) else {
            continue;
        };
        let up = resolve(g, st, &tree, v, None, [Route::Leg, Route::Up, Route::Up])?;
        let taken: Vec<u32> = up[0]
            .windows(2)
            .chain(up[1].windows(2))
            .map(|w| st.colors[g.edge_id(w[0], w[1]).unwrap()].unwrap())
            .collect();
        let c = (1..=6).find(|c| !taken.contains(c)).unwrap();
        st.colors[e] = Some(c);
        let leg_path = up[0].clone();
        let new_leg = vec![v, foot];
        // single-edge paths by ascending color, as the class tables list them
        let (a, b) = if c < st.colors[own].unwrap() {
            (new_leg, leg_path)
        } else {
            (leg_path, new_leg)
        };
        st.paths[v] = Some([a, b, up[1].clone()]);
        st.flagged[v] = true;
        report.spare_legs += 1;
    }

    let a: Vec<usize> = st.dangerous.iter().copied().filter(|&v| !st.flagged[v]).collect();
    for &v in &st.component {
        if !a.contains(&v) && !st.flagged[v] {
            return Err(diag(v, "safe vertex without a certificate"));
        }
    }
    report.dangerous += a.len();

    let root = tree.root();
    for w in order_dangerous(&a, &tree) {
        if st.flagged[w] {
            report.skipped += 1;
            continue;
        }
        let before = options.check_each_step.then(|| st.colors.clone());
        step(g, st, &tree, root, w, report)?;
        if let Some(before) = before {
            report.checked_steps += 1;
            let own = st.leg[w].unwrap();
            report.recolor_violations += (0..g.m())
                .filter(|&e| e != own && before[e].is_some() && before[e] != st.colors[e])
                .count();
            report.safety_violations += unsafe_flagged(g, d, st);
        }
    }
    st.tree = Some(tree);
    Ok(())
}

/// One dispatch step for the dangerous leaf `w`.
fn step(g: &Graph, st: &mut Stage1State, tree: &BfsTree, root: usize, w: usize, report: &mut Theorem3Report) -> Result<()> {
    let is_type_i = |v: usize| matches!(tree.subtree_type(v), Some(SubtreeType::TypeI(_)));
    let candidates: Vec<(usize, EdgeId)> = g
        .incident(w)
        .filter(|&(x, e)| tree.contains(x) && st.colors[e].is_none())
        .collect();
    if candidates.is_empty() {
        return Err(diag(w, "dangerous leaf has no uncolored edge into its component"));
    }
    let to_type_i: Vec<_> = candidates.iter().copied().filter(|&(x, _)| is_type_i(x)).collect();
    let w_type_ii = tree.subtree_type(w) == Some(SubtreeType::TypeII);
    let (case, pool) = match (w_type_ii, to_type_i.is_empty()) {
        (true, false) => (1u8, to_type_i),
        (true, true) => (2, candidates),
        (false, false) => (3, to_type_i),
        (false, true) => (4, candidates),
    };
    let &(v, edge) = pool
        .iter()
        .min_by_key(|&&(x, _)| (tree.height(x), x))
        .unwrap();
    let hw = tree.height(w).unwrap();
    let dh = tree.height(v).unwrap() as i64 - hw as i64;
    let allowed = match case {
        1 => 0..=1,
        4 => -1..=0,
        _ => -1..=1,
    };
    if !allowed.contains(&dh) {
        return Err(diag(w, format!("case {case}: height difference {dh} to {v} outside the case's range")));
    }
    let recolored = st.colors[st.leg[v].unwrap()] != st.leg_color[v];
    if (case == 4 || ((case == 2 || case == 3) && dh == -1)) && !st.flagged[v] {
        return Err(diag(w, format!("case {case}: {v} should already be safe")));
    }
    if (case == 1 || dh == 1) && recolored {
        return Err(diag(w, format!("case {case}: leg of {v} should not be recolored yet")));
    }
    let residue = (hw % 3) as u8;
    let action = lookup(case, residue, dh as i8, recolored)
        .ok_or_else(|| diag(w, format!("no table entry for case {case}, residue {residue}, dh {dh}")))?;

    st.colors[edge] = Some(action.edge);
    if let Some(c) = action.recolor {
        st.colors[st.leg[w].unwrap()] = Some(c);
    }
    st.paths[w] = Some(resolve(g, st, tree, w, Some(v), action.w_routes)?);
    if !st.flagged[v] {
        let routes = action
            .v_routes
            .ok_or_else(|| diag(w, format!("case {case}: {v} is unsafe where it must be safe")))?;
        st.paths[v] = Some(resolve(g, st, tree, v, Some(w), routes)?);
    }
    st.flagged[w] = true;
    st.flagged[v] = true;

    // first-level exception: the root's second path ran through w, whose leg
    // just changed; v is on the first level too with an untouched leg
    if action.recolor.is_some() && tree.parent(w) == Some(root) {
        let through_w = st.paths[root].as_ref().is_some_and(|p| p[1].contains(&w));
        if through_w {
            if tree.parent(v) != Some(root) {
                return Err(diag(w, "root path through a recolored leg cannot be re-routed"));
            }
            let foot = st.foot(g, v);
            st.paths[root].as_mut().unwrap()[1] = vec![root, v, foot];
        }
    }
    report.case_counts[case as usize - 1] += 1;
    Ok(())
}

/// Number of flagged vertices whose stored paths no longer form a certificate
/// under the partial coloring.
fn unsafe_flagged(g: &Graph, d: &[usize], st: &Stage1State) -> usize {
    // uncolored edges get pairwise distinct colors no path may use
    let placeholder: Vec<u32> = (0..g.m())
        .map(|e| st.colors[e].unwrap_or(1_000_000 + e as u32))
        .collect();
    let c = EdgeColoring::new(g, placeholder).expect("total");
    st.component
        .iter()
        .filter(|&&v| st.flagged[v])
        .filter(|&&v| {
            let Some(p) = st.paths[v].clone() else {
                return true;
            };
            let uses_uncolored = p
                .iter()
                .flat_map(|path| path.windows(2))
                .any(|w| g.edge_id(w[0], w[1]).map_or(true, |e| st.colors[e].is_none()));
            uses_uncolored || certificate_problem(g, &c, d, &SafetyCertificate::new(g, &c, v, p)).is_some()
        })
        .count()
}
