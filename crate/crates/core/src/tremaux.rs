//! Depth-first search producing the Trémaux tree and the per-edge data the
//! planarity test runs on: orientation, `low`/`low2`, block/thin/thick
//! classes and the anchor of every back-edge.
//!
//! Vertex comparisons in the tree order are done by depth. Every comparison
//! made here is between ancestors of one common vertex, where depth order and
//! tree order coincide.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    /// `low(e)` is the tail: nothing above `e` returns below it.
    Block,
    /// Everything above `e` that returns below the tail returns to `low(e)`.
    Thin,
    /// Some back-edge above `e` returns strictly between `low(e)` and the tail.
    Thick,
}

#[derive(Debug, Clone)]
pub struct TremauxData {
    roots: Vec<VertexId>,
    parent_edge: Vec<Option<EdgeId>>,
    depth: Vec<u32>,
    orient: Vec<(VertexId, VertexId)>,
    tree: Vec<bool>,
    preorder: Vec<VertexId>,
    out_offsets: Vec<usize>,
    out_edges: Vec<EdgeId>,
    init_anchor: Vec<Option<EdgeId>>,
    low: Vec<VertexId>,
    low2: Vec<Option<VertexId>>,
    vertex_low: Vec<VertexId>,
    edge_class: Vec<Option<EdgeClass>>,
}

/// DFS from `root`, then lows and classes. Fails if the graph is disconnected.
pub fn run_dfs(g: &Graph, root: VertexId) -> Result<TremauxData> {
    let mut t = TremauxData::search(g, std::iter::once(root));
    if let Some(v) = (0..g.vertex_count()).find(|&v| !t.reached(v)) {
        return Err(Error::NotConnected(v + 1));
    }
    t.compute_lows();
    t.classify_edges();
    Ok(t)
}

/// One DFS per connected component, rooted at the smallest unreached vertex.
pub fn run_dfs_forest(g: &Graph) -> TremauxData {
    let mut t = TremauxData::search(g, 0..g.vertex_count());
    t.compute_lows();
    t.classify_edges();
    t
}

const UNSEEN: u32 = u32::MAX;

impl TremauxData {
    fn search(g: &Graph, roots: impl IntoIterator<Item = VertexId>) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut t = TremauxData {
            roots: Vec::new(),
            parent_edge: vec![None; n],
            depth: vec![UNSEEN; n],
            orient: g.edges().to_vec(),
            tree: vec![false; m],
            preorder: Vec::with_capacity(n),
            out_offsets: Vec::new(),
            out_edges: Vec::new(),
            init_anchor: vec![None; m],
            low: Vec::new(),
            low2: Vec::new(),
            vertex_low: Vec::new(),
            edge_class: Vec::new(),
        };
        let mut oriented = vec![false; m];
        // Tree edge currently being explored out of each vertex on the DFS stack.
        let mut active: Vec<Option<EdgeId>> = vec![None; n];
        let mut stack: Vec<(VertexId, usize)> = Vec::new();

        for root in roots {
            if t.depth[root] != UNSEEN {
                continue;
            }
            t.roots.push(root);
            t.depth[root] = 0;
            t.preorder.push(root);
            stack.push((root, 0));
            while let Some(top) = stack.last_mut() {
                let (v, pos) = *top;
                let inc = g.incidence(v);
                if pos == inc.len() {
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                let h = inc[pos];
                let e = h.edge();
                if oriented[e] {
                    continue;
                }
                oriented[e] = true;
                let w = g.target(h);
                t.orient[e] = (v, w);
                if t.depth[w] == UNSEEN {
                    t.tree[e] = true;
                    t.parent_edge[w] = Some(e);
                    t.depth[w] = t.depth[v] + 1;
                    t.preorder.push(w);
                    active[v] = Some(e);
                    stack.push((w, 0));
                } else {
                    // An unoriented edge to a seen vertex always leads to an
                    // ancestor still on the stack.
                    debug_assert!(t.depth[w] < t.depth[v]);
                    t.init_anchor[e] = active[w];
                }
            }
        }

        // Outgoing edges per vertex, in incidence order.
        let mut out_offsets = vec![0usize; n + 1];
        for e in 0..m {
            if t.depth[t.orient[e].0] != UNSEEN {
                out_offsets[t.orient[e].0 + 1] += 1;
            }
        }
        for v in 0..n {
            out_offsets[v + 1] += out_offsets[v];
        }
        let mut out_edges = vec![0; out_offsets[n]];
        let mut fill = out_offsets.clone();
        for v in 0..n {
            for &h in g.incidence(v) {
                let e = h.edge();
                if t.orient[e].0 == v && t.depth[v] != UNSEEN {
                    out_edges[fill[v]] = e;
                    fill[v] += 1;
                }
            }
        }
        t.out_offsets = out_offsets;
        t.out_edges = out_edges;
        t
    }

    fn reached(&self, v: VertexId) -> bool {
        self.depth[v] != UNSEEN
    }

    /// Fills `low`, `low2` and the vertex lows, children before parents.
    pub fn compute_lows(&mut self) {
        let n = self.depth.len();
        let m = self.orient.len();
        self.low = vec![0; m];
        self.low2 = vec![None; m];
        self.vertex_low = (0..n).collect();
        // Two shallowest distinct return points of back-edges leaving the
        // subtree of each vertex.
        let mut returns: Vec<(Option<VertexId>, Option<VertexId>)> = vec![(None, None); n];

        for i in (0..self.preorder.len()).rev() {
            let v = self.preorder[i];
            let mut acc = (None, None);
            for k in self.out_offsets[v]..self.out_offsets[v + 1] {
                let g = self.out_edges[k];
                let (x, y) = self.orient[g];
                if self.tree[g] {
                    let (a, b) = returns[y];
                    for r in [a, b].into_iter().flatten() {
                        acc = self.insert_return(acc, r);
                    }
                } else {
                    debug_assert_eq!(x, v);
                    self.low[g] = y;
                    acc = self.insert_return(acc, y);
                }
            }
            if let Some(m1) = acc.0 {
                if self.depth[m1] < self.depth[v] {
                    self.vertex_low[v] = m1;
                }
            }
            returns[v] = acc;
            if let Some(p) = self.parent_edge[v] {
                let u = self.orient[p].0;
                let (m1, m2) = acc;
                match m1 {
                    Some(x) if self.depth[x] < self.depth[u] => {
                        self.low[p] = x;
                        self.low2[p] = m2;
                    }
                    Some(x) if self.depth[x] == self.depth[u] => {
                        self.low[p] = u;
                        self.low2[p] = m2;
                    }
                    other => {
                        self.low[p] = u;
                        self.low2[p] = other;
                    }
                }
            }
        }
    }

    fn insert_return(
        &self,
        (m1, m2): (Option<VertexId>, Option<VertexId>),
        x: VertexId,
    ) -> (Option<VertexId>, Option<VertexId>) {
        let d = self.depth[x];
        match m1 {
            None => (Some(x), None),
            Some(a) if d < self.depth[a] => (Some(x), Some(a)),
            Some(a) if d == self.depth[a] => (m1, m2),
            Some(_) => match m2 {
                Some(b) if self.depth[b] <= d => (m1, m2),
                _ => (m1, Some(x)),
            },
        }
    }

    /// Block/thin/thick class of every tree edge. Requires lows.
    pub fn classify_edges(&mut self) {
        let m = self.orient.len();
        self.edge_class = vec![None; m];
        for e in 0..m {
            if !self.tree[e] {
                continue;
            }
            let x = self.orient[e].0;
            let class = if self.low[e] == x {
                EdgeClass::Block
            } else {
                match self.low2[e] {
                    Some(l2) if self.depth[l2] < self.depth[x] => EdgeClass::Thick,
                    _ => EdgeClass::Thin,
                }
            };
            self.edge_class[e] = Some(class);
        }
    }

    pub fn roots(&self) -> &[VertexId] {
        &self.roots
    }

    pub fn vertex_count(&self) -> usize {
        self.depth.len()
    }

    pub fn edge_count(&self) -> usize {
        self.orient.len()
    }

    #[inline]
    pub fn depth(&self, v: VertexId) -> u32 {
        self.depth[v]
    }

    #[inline]
    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    /// `(source, target)` after orientation: tree edges point away from the
    /// root, back-edges towards it.
    #[inline]
    pub fn orient(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.orient[e]
    }

    #[inline]
    pub fn is_tree(&self, e: EdgeId) -> bool {
        self.tree[e]
    }

    /// Vertices in DFS discovery order.
    pub fn preorder(&self) -> &[VertexId] {
        &self.preorder
    }

    /// Outgoing edges of `v` in incidence order.
    #[inline]
    pub fn out(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// For a back-edge `(x, y)`: the tree edge out of `y` on the path to `x`.
    #[inline]
    pub fn init_anchor(&self, e: EdgeId) -> Option<EdgeId> {
        self.init_anchor[e]
    }

    #[inline]
    pub fn low(&self, e: EdgeId) -> VertexId {
        self.low[e]
    }

    #[inline]
    pub fn low_depth(&self, e: EdgeId) -> u32 {
        self.depth[self.low[e]]
    }

    #[inline]
    pub fn low2(&self, e: EdgeId) -> Option<VertexId> {
        self.low2[e]
    }

    /// Lowest vertex reachable from `v` by a tree path followed by at most
    /// one back-edge; `v` itself when nothing returns below it.
    #[inline]
    pub fn vertex_low(&self, v: VertexId) -> VertexId {
        self.vertex_low[v]
    }

    #[inline]
    pub fn edge_class(&self, e: EdgeId) -> Option<EdgeClass> {
        self.edge_class[e]
    }

    pub fn back_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.orient.len()).filter(|&e| !self.tree[e])
    }

    /// True when `a` lies on the tree path from the root to `b` (inclusive).
    pub fn is_ancestor(&self, a: VertexId, mut b: VertexId) -> bool {
        while self.depth[b] > self.depth[a] {
            b = self.orient[self.parent_edge[b].expect("non-root has a parent")].0;
        }
        a == b
    }
}
