//! Loopless multigraph with stable edge ids and insertion-ordered incidence.
//!
//! Vertices are `0..n` internally. Edge `i` is the `i`-th pair handed to
//! [`Graph::new`], and every vertex sees its incident edges in exactly that
//! order. The DFS, and therefore every later stage, depends on this order, so
//! it is never sorted behind the caller's back.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// One end of an edge. Edge `e` owns half-edges `2e` (at its tail) and
/// `2e + 1` (at its head).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge(usize);

impl HalfEdge {
    #[inline]
    pub fn new(edge: EdgeId, at_head: bool) -> Self {
        HalfEdge(2 * edge + at_head as usize)
    }

    #[inline]
    pub fn from_index(index: usize) -> Self {
        HalfEdge(index)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0
    }

    #[inline]
    pub fn edge(self) -> EdgeId {
        self.0 >> 1
    }

    #[inline]
    pub fn is_at_head(self) -> bool {
        self.0 & 1 == 1
    }

    #[inline]
    pub fn twin(self) -> Self {
        HalfEdge(self.0 ^ 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    ends: Vec<(VertexId, VertexId)>,
    // CSR incidence: half-edges of vertex v live in inc[offsets[v]..offsets[v + 1]].
    offsets: Vec<usize>,
    inc: Vec<HalfEdge>,
}

impl Graph {
    /// Builds a graph on `n` vertices from 0-based endpoint pairs.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        edge: i + 1,
                        vertex: w + 1,
                        n,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge {
                    edge: i + 1,
                    vertex: u + 1,
                });
            }
        }

        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut fill = offsets.clone();
        let mut inc = vec![HalfEdge(0); 2 * edges.len()];
        for (e, &(u, v)) in edges.iter().enumerate() {
            inc[fill[u]] = HalfEdge::new(e, false);
            fill[u] += 1;
            inc[fill[v]] = HalfEdge::new(e, true);
            fill[v] += 1;
        }

        Ok(Graph {
            n,
            ends: edges.to_vec(),
            offsets,
            inc,
        })
    }

    /// Same graph under new vertex and edge numbers: old vertex `v` becomes
    /// `vertex_new[v]`, old edge `e` becomes `edge_new[e]`. Endpoint order and
    /// the incidence order around every vertex are kept. Both maps must be
    /// permutations.
    pub fn relabeled(&self, vertex_new: &[VertexId], edge_new: &[EdgeId]) -> Graph {
        let n = self.n;
        let mut ends = vec![(0, 0); self.ends.len()];
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            ends[edge_new[e]] = (vertex_new[u], vertex_new[v]);
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[vertex_new[v] + 1] = self.degree(v);
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut inc = vec![HalfEdge(0); self.inc.len()];
        for v in 0..n {
            let start = offsets[vertex_new[v]];
            for (slot, &h) in inc[start..].iter_mut().zip(self.incidence(v)) {
                *slot = HalfEdge::new(edge_new[h.edge()], h.is_at_head());
            }
        }
        Graph {
            n,
            ends,
            offsets,
            inc,
        }
    }

    /// Builds a graph from 1-based endpoint pairs, as found in edge-list files.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut zero = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange {
                        edge: i + 1,
                        vertex: w,
                        n,
                    });
                }
            }
            zero.push((u - 1, v - 1));
        }
        Graph::new(n, &zero)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.ends
    }

    /// Half-edges at `v`, in edge insertion order.
    #[inline]
    pub fn incidence(&self, v: VertexId) -> &[HalfEdge] {
        &self.inc[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Vertex the half-edge is attached to.
    #[inline]
    pub fn origin(&self, h: HalfEdge) -> VertexId {
        let (u, v) = self.ends[h.edge()];
        if h.is_at_head() {
            v
        } else {
            u
        }
    }

    /// Vertex at the far end of the half-edge.
    #[inline]
    pub fn target(&self, h: HalfEdge) -> VertexId {
        self.origin(h.twin())
    }

    /// The half-edge of `e` attached at `v`. `v` must be an endpoint of `e`.
    #[inline]
    pub fn half_at(&self, e: EdgeId, v: VertexId) -> HalfEdge {
        let (u, w) = self.ends[e];
        debug_assert!(v == u || v == w);
        HalfEdge::new(e, v != u)
    }

    /// Connected components, each listed in ascending vertex order, ordered
    /// by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &h in self.incidence(v) {
                    let w = self.target(h);
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Component index of every vertex, numbered as in
    /// [`Graph::connected_components`].
    pub fn component_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (c, verts) in self.connected_components().iter().enumerate() {
            for &v in verts {
                labels[v] = c;
            }
        }
        labels
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &h in self.incidence(v) {
                let w = self.target(h);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    /// True when no two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.ends.len());
        self.ends
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.connected_components(), vec![vec![0]]);
    }

    #[test]
    fn parallel_edges_are_kept() {
        let g = Graph::from_one_based(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert!(!g.is_simple());
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(
            Graph::from_one_based(3, &[(1, 2), (3, 3)]),
            Err(Error::LoopEdge { edge: 2, vertex: 3 })
        );
        assert!(matches!(
            Graph::from_one_based(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, .. })
        ));
        assert!(matches!(
            Graph::from_one_based(3, &[(0, 1)]),
            Err(Error::VertexOutOfRange { vertex: 0, .. })
        ));
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn incidence_follows_insertion_order() {
        let g = Graph::new(3, &[(0, 1), (2, 0), (1, 2), (0, 2)]).unwrap();
        let at0: Vec<_> = g.incidence(0).iter().map(|h| h.edge()).collect();
        assert_eq!(at0, vec![0, 1, 3]);
        assert_eq!(g.origin(g.incidence(0)[1]), 0);
        assert_eq!(g.target(g.incidence(0)[1]), 2);
    }

    #[test]
    fn components() {
        let g = Graph::new(4, &[]).unwrap();
        assert_eq!(g.connected_components().len(), 4);

        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert!(!g.is_connected());
    }

    #[test]
    fn twin_is_an_involution() {
        for i in 0..20 {
            let h = HalfEdge::from_index(i);
            assert_eq!(h.twin().twin(), h);
            assert_ne!(h.twin(), h);
            assert_eq!(h.twin().edge(), h.edge());
        }
    }
}
