//! Outgoing edges of every vertex sorted into a fixed linear extension of the
//! thin-before-thick precedence order.
//!
//! The key of an edge is `2 * depth(low(e)) + thick(e)`. One counting sort
//! over all edges, followed by a stable redistribution into per-vertex lists,
//! gives every list in key order with ties in incidence order.

use crate::graph::{EdgeId, VertexId};
use crate::tremaux::{EdgeClass, TremauxData};

#[derive(Debug, Clone)]
pub struct SortedAdjacency {
    offsets: Vec<usize>,
    edges: Vec<EdgeId>,
    key: Vec<usize>,
}

/// Sort key of `e`; back-edges and non-thick tree edges get thick bit 0.
pub fn sort_key(t: &TremauxData, e: EdgeId) -> usize {
    let thick = t.edge_class(e) == Some(EdgeClass::Thick);
    2 * t.low_depth(e) as usize + thick as usize
}

pub fn tt_sort(t: &TremauxData) -> SortedAdjacency {
    let n = t.vertex_count();
    let m = t.edge_count();
    let key: Vec<usize> = (0..m).map(|e| sort_key(t, e)).collect();

    // Buckets are filled vertex by vertex in incidence order, which keeps the
    // sort stable with respect to incidence order inside every vertex.
    let buckets = 2 * n + 2;
    let mut start = vec![0usize; buckets + 1];
    for &k in &key {
        start[k + 1] += 1;
    }
    for k in 0..buckets {
        start[k + 1] += start[k];
    }
    let mut by_key = vec![0; m];
    for v in 0..n {
        for &e in t.out(v) {
            by_key[start[key[e]]] = e;
            start[key[e]] += 1;
        }
    }

    let mut offsets = vec![0usize; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + t.out(v).len();
    }
    let mut fill = offsets.clone();
    let mut edges = vec![0; m];
    for &e in &by_key {
        let v = t.orient(e).0;
        edges[fill[v]] = e;
        fill[v] += 1;
    }
    SortedAdjacency {
        offsets,
        edges,
        key,
    }
}

impl SortedAdjacency {
    /// Outgoing edges of `v`, earliest first.
    #[inline]
    pub fn out(&self, v: VertexId) -> &[EdgeId] {
        &self.edges[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn key(&self, e: EdgeId) -> usize {
        self.key[e]
    }
}

/// Event emitted by [`steered_dfs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Visit {
    Enter(VertexId),
    /// An outgoing back-edge reached at its sorted position.
    BackEdge(EdgeId),
    Leave(VertexId),
}

/// Walks the Trémaux tree again, taking the outgoing edges of each vertex in
/// sorted order. Every vertex is left after all of its subtree, so `Leave`
/// events come in a valid bottom-up processing order.
pub fn steered_dfs(t: &TremauxData, adj: &SortedAdjacency, mut visit: impl FnMut(Visit)) {
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    for &root in t.roots() {
        visit(Visit::Enter(root));
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let (v, pos) = *top;
            let out = adj.out(v);
            if pos == out.len() {
                stack.pop();
                visit(Visit::Leave(v));
                continue;
            }
            top.1 += 1;
            let e = out[pos];
            if t.is_tree(e) {
                let w = t.orient(e).1;
                visit(Visit::Enter(w));
                stack.push((w, 0));
            } else {
                visit(Visit::BackEdge(e));
            }
        }
    }
}
