//! Sparsest cuts of trees in linear time.
//!
//! Removing an edge `e = uv` from a tree leaves two components `V^e_u ∋ u`
//! and `V^e_v ∋ v`. A center edge minimises `||V^e_u| - |V^e_v||`; some center
//! edge is a sparsest cut, so
//!
//! ```text
//! b(T) = (1/2) (1/|V^e_u| + 1/|V^e_v|)
//! ```
//!
//! at any center edge. The set of center edges always shares a common vertex.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, Rational};

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() == g.n() - 1 && g.is_connected()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterEdgeResult {
    /// Edges `(u, v)`, `u < v`, achieving the minimum imbalance.
    pub center_edges: Vec<(usize, usize)>,
    /// Minimum of `||V^e_u| - |V^e_v||` over all edges.
    pub delta: usize,
    /// For every edge of the tree in sorted order: `((u, v), (|V^e_u|, |V^e_v|))`.
    pub component_sizes: Vec<((usize, usize), (usize, usize))>,
    pub b: Rational,
}

pub fn center_edges(t: &Graph) -> Result<CenterEdgeResult> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let n = t.n();
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }

    // iterative DFS from vertex 0, then subtree sizes in reverse preorder
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut subtree = vec![1usize; n];
    for &u in order.iter().skip(1).rev() {
        subtree[parent[u]] += subtree[u];
    }

    let component_sizes: Vec<_> = t
        .edges()
        .iter()
        .map(|&(u, v)| {
            let sizes = if parent[v] == u {
                (n - subtree[v], subtree[v])
            } else {
                (subtree[u], n - subtree[u])
            };
            ((u, v), sizes)
        })
        .collect();

    let imbalance = |(a, b): (usize, usize)| a.abs_diff(b);
    let delta = component_sizes
        .iter()
        .map(|&(_, sizes)| imbalance(sizes))
        .min()
        .expect("a tree on >= 2 vertices has an edge");
    let center: Vec<_> = component_sizes
        .iter()
        .filter(|&&(_, sizes)| imbalance(sizes) == delta)
        .collect();
    let (_, (a, b)) = *center[0];
    Ok(CenterEdgeResult {
        center_edges: center.iter().map(|&&(e, _)| e).collect(),
        delta,
        b: (ratio(1, a as i64) + ratio(1, b as i64)) / 2,
        component_sizes,
    })
}

pub fn b_tree(t: &Graph) -> Result<Rational> {
    Ok(center_edges(t)?.b)
}

/// Whether the given tree edges all share one vertex. A single edge (or
/// none) is trivially a substar.
pub fn substar_check(t: &Graph, edges: &[(usize, usize)]) -> Result<bool> {
    for &(u, v) in edges {
        if !t.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
    }
    let mut common: Option<BTreeSet<usize>> = None;
    for &(u, v) in edges {
        let ends = BTreeSet::from([u, v]);
        common = Some(match common {
            None => ends,
            Some(c) => c.intersection(&ends).copied().collect(),
        });
    }
    Ok(common.is_none_or(|c| !c.is_empty()))
}
