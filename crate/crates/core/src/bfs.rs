//! Breadth-first spanning trees of a vertex set, with the level structure the
//! periodic coloring works on.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{membership, Graph};

/// Which first-level subtree a vertex hangs from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SubtreeType {
    Root,
    /// Subtree of the `i`-th first-level vertex (1-based), for every `i` but the last.
    TypeI(usize),
    /// Subtree of the last first-level vertex in visitation order.
    TypeII,
}

#[derive(Debug, Clone)]
pub struct BfsTree {
    root: usize,
    parent: Vec<Option<usize>>,
    height: Vec<Option<usize>>,
    order: Vec<usize>,
    rank: Vec<usize>,
    children: Vec<Vec<usize>>,
    first_level: Vec<usize>,
    subtree: Vec<Option<SubtreeType>>,
}

impl BfsTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Distance from the root inside the component, `None` outside it.
    pub fn height(&self, v: usize) -> Option<usize> {
        self.height[v]
    }

    /// Vertices in visitation order, root first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of `v` in the visitation order.
    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.height[v].is_some()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.contains(v) && self.children[v].is_empty()
    }

    /// `v_1, ..., v_k` in visitation order.
    pub fn first_level(&self) -> &[usize] {
        &self.first_level
    }

    pub fn subtree_type(&self, v: usize) -> Option<SubtreeType> {
        self.subtree[v]
    }

    /// The first-level ancestor of `v` (itself if `v` is on the first level).
    pub fn first_level_ancestor(&self, v: usize) -> Option<usize> {
        let mut x = v;
        loop {
            match self.parent[x] {
                None => return None,
                Some(p) if p == self.root => return Some(x),
                Some(p) => x = p,
            }
        }
    }

    /// 1-based index `i` of the first-level ancestor `v_i`, 0 for the root.
    pub fn first_level_index(&self, v: usize) -> usize {
        match self.subtree[v] {
            Some(SubtreeType::TypeI(i)) => i,
            Some(SubtreeType::TypeII) => self.first_level.len(),
            _ => 0,
        }
    }

    /// Vertices of the component sorted by visitation order.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// BFS tree of `component` rooted at `root`; neighbors are visited in ascending id
/// and only edges inside `component` are used.
pub fn bfs_tree(g: &Graph, component: &[usize], root: usize) -> Result<BfsTree> {
    let n = g.n();
    let inside = membership(n, component);
    if root >= n || !inside[root] {
        return Err(Error::RootOutsideComponent(root));
    }
    let mut parent = vec![None; n];
    let mut height = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(component.len());
    height[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let h = height[v].unwrap();
        for &u in g.neighbors(v) {
            if inside[u] && height[u].is_none() {
                height[u] = Some(h + 1);
                parent[u] = Some(v);
                children[v].push(u);
                queue.push_back(u);
            }
        }
    }
    if let Some(&missing) = component.iter().find(|&&v| height[v].is_none()) {
        return Err(Error::Disconnected(root, missing));
    }

    let mut rank = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let first_level = children[root].clone();
    let k = first_level.len();
    let mut subtree = vec![None; n];
    subtree[root] = Some(SubtreeType::Root);
    for (i, &f) in first_level.iter().enumerate() {
        subtree[f] = Some(if i + 1 == k {
            SubtreeType::TypeII
        } else {
            SubtreeType::TypeI(i + 1)
        });
    }
    // parents precede children in BFS order
    for &v in &order {
        if let Some(p) = parent[v] {
            if p != root {
                subtree[v] = subtree[p];
            }
        }
    }

    Ok(BfsTree {
        root,
        parent,
        height,
        order,
        rank,
        children,
        first_level,
        subtree,
    })
}
