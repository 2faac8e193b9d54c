//! Combinatorial embedding from the back-edge sides, plus face tracing and
//! the Euler certificate.
//!
//! Rotations are read counterclockwise. Around a vertex `v` the rotation is:
//! the entering tree edge, then the outgoing edges of side `-1` from last to
//! first in sorted order, then those of side `+1` from first to last. Every
//! outgoing tree edge is flanked by the back-edges that return to `v` from its
//! subtree: side `-1` ones just before it, side `+1` ones just after it.

mod faces;

pub use faces::{certify, trace_faces, CertResult, ComponentEuler, FaceTrace};

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, HalfEdge, VertexId};
use crate::lrtest::LrOutcome;
use crate::tremaux::TremauxData;
use crate::ttorder::SortedAdjacency;

/// Anything with numbered vertices and edges given by endpoint pairs.
pub trait Endpoints {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId);

    fn origin(&self, h: HalfEdge) -> VertexId {
        let (u, v) = self.endpoints(h.edge());
        if h.is_at_head() {
            v
        } else {
            u
        }
    }
}

impl Endpoints for Graph {
    fn vertex_count(&self) -> usize {
        Graph::vertex_count(self)
    }
    fn edge_count(&self) -> usize {
        Graph::edge_count(self)
    }
    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        Graph::endpoints(self, e)
    }
}

/// Bare edge list that may contain loops. Used where a rotation system has to
/// be checked against the input exactly as written.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub ends: Vec<(VertexId, VertexId)>,
}

impl Endpoints for EdgeList {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn edge_count(&self) -> usize {
        self.ends.len()
    }
    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e]
    }
}

/// Cyclic order of half-edges around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    offsets: Vec<usize>,
    ring: Vec<HalfEdge>,
}

impl RotationSystem {
    /// Checks that every half-edge of `g` appears exactly once, at its own
    /// vertex.
    pub fn from_lists<G: Endpoints + ?Sized>(g: &G, lists: Vec<Vec<HalfEdge>>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut ring = Vec::with_capacity(2 * g.edge_count());
        for list in lists {
            ring.extend(list);
            offsets.push(ring.len());
        }
        Self::from_parts(g, offsets, ring)
    }

    /// Flat form: the rotation at `v` is `ring[offsets[v]..offsets[v + 1]]`.
    pub fn from_parts<G: Endpoints + ?Sized>(
        g: &G,
        offsets: Vec<usize>,
        ring: Vec<HalfEdge>,
    ) -> Result<Self> {
        if offsets.len() != g.vertex_count() + 1 {
            return Err(Error::RotationMismatch(format!(
                "{} vertex rows for {} vertices",
                offsets.len().saturating_sub(1),
                g.vertex_count()
            )));
        }
        let mut seen = vec![false; 2 * g.edge_count()];
        for v in 0..g.vertex_count() {
            for &h in &ring[offsets[v]..offsets[v + 1]] {
                if h.index() >= seen.len() {
                    return Err(Error::RotationMismatch(format!(
                        "edge {} does not exist",
                        h.edge() + 1
                    )));
                }
                if g.origin(h) != v {
                    return Err(Error::RotationMismatch(format!(
                        "edge {} is listed at vertex {} but does not end there",
                        h.edge() + 1,
                        v + 1
                    )));
                }
                if std::mem::replace(&mut seen[h.index()], true) {
                    return Err(Error::RotationMismatch(format!(
                        "edge {} is listed twice at vertex {}",
                        h.edge() + 1,
                        v + 1
                    )));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::RotationMismatch(format!(
                "edge {} is missing at vertex {}",
                i / 2 + 1,
                g.origin(HalfEdge::from_index(i)) + 1
            )));
        }
        Ok(RotationSystem { offsets, ring })
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Half-edges around `v`, counterclockwise.
    pub fn at(&self, v: VertexId) -> &[HalfEdge] {
        &self.ring[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn to_lists(&self) -> Vec<Vec<HalfEdge>> {
        (0..self.vertex_count()).map(|v| self.at(v).to_vec()).collect()
    }

    /// One line per vertex, `v: n1/e1 n2/e2 ...`, all numbers 1-based.
    pub fn to_text<G: Endpoints + ?Sized>(&self, g: &G) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            let _ = write!(out, "{}:", v + 1);
            for &h in self.at(v) {
                let _ = write!(out, " {}/{}", g.origin(h.twin()) + 1, h.edge() + 1);
            }
            out.push('\n');
        }
        out
    }

    /// Parses the format written by [`RotationSystem::to_text`]. Blank lines
    /// and lines starting with `#` are skipped, as is a trailing `faces:` line.
    pub fn parse<G: Endpoints + ?Sized>(g: &G, text: &str) -> Result<Self> {
        let bad = |msg: String| Error::RotationMismatch(msg);
        let mut lists: Vec<Option<Vec<HalfEdge>>> = vec![None; g.vertex_count()];
        let mut loop_seen = vec![false; g.edge_count()];
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("faces:") {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| bad(format!("missing ':' in {line:?}")))?;
            let v: usize = head
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad vertex {head:?}")))?;
            if v == 0 || v > g.vertex_count() {
                return Err(bad(format!("vertex {v} out of range")));
            }
            let v = v - 1;
            let mut list = Vec::new();
            for tok in rest.split_whitespace() {
                let (nb, e) = tok
                    .split_once('/')
                    .ok_or_else(|| bad(format!("bad entry {tok:?}")))?;
                let nb: usize = nb.parse().map_err(|_| bad(format!("bad entry {tok:?}")))?;
                let e: usize = e.parse().map_err(|_| bad(format!("bad entry {tok:?}")))?;
                if e == 0 || e > g.edge_count() {
                    return Err(bad(format!("edge {e} out of range")));
                }
                let e = e - 1;
                let (a, b) = g.endpoints(e);
                let h = if a == b {
                    HalfEdge::new(e, std::mem::replace(&mut loop_seen[e], true))
                } else if a == v {
                    HalfEdge::new(e, false)
                } else {
                    HalfEdge::new(e, true)
                };
                if g.origin(h) != v || g.origin(h.twin()) + 1 != nb {
                    return Err(bad(format!(
                        "entry {tok} at vertex {} does not match the graph",
                        v + 1
                    )));
                }
                list.push(h);
            }
            if lists[v].replace(list).is_some() {
                return Err(bad(format!("vertex {} listed twice", v + 1)));
            }
        }
        let lists = lists
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| bad(format!("vertex {} missing", v + 1))))
            .collect::<Result<Vec<_>>>()?;
        RotationSystem::from_lists(g, lists)
    }
}

/// Side of every edge: back-edges keep their own side, a tree edge takes the
/// side of the highest-returning back-edge above it, `+1` if there is none.
pub fn lambda_hat(t: &TremauxData, outcome: &LrOutcome) -> Vec<i8> {
    (0..t.edge_count())
        .map(|e| {
            if t.is_tree(e) {
                outcome.ref_edge[e].map_or(1, |f| outcome.lambda[f])
            } else {
                outcome.lambda[e]
            }
        })
        .collect()
}

pub fn build_rotation(
    g: &Graph,
    t: &TremauxData,
    adj: &SortedAdjacency,
    outcome: &LrOutcome,
) -> Result<RotationSystem> {
    if !outcome.is_planar() {
        return Err(Error::InternalInconsistency(
            "no embedding for a non-planar verdict".into(),
        ));
    }
    let m = g.edge_count();
    if outcome.lambda.len() != m || t.edge_count() != m {
        return Err(Error::InternalInconsistency(
            "outcome and tree belong to different graphs".into(),
        ));
    }
    let hat = lambda_hat(t, outcome);

    // Outgoing edges of every vertex in rotation order.
    let mut out_offsets = vec![0usize; g.vertex_count() + 1];
    let mut out_ring = Vec::with_capacity(m);
    for v in 0..g.vertex_count() {
        let out = adj.out(v);
        out_ring.extend(out.iter().rev().filter(|&&e| hat[e] == -1));
        out_ring.extend(out.iter().filter(|&&e| hat[e] == 1));
        out_offsets[v + 1] = out_ring.len();
    }
    let ring_out = |v: VertexId| &out_ring[out_offsets[v]..out_offsets[v + 1]];

    // Back-edges returning to the same side of the same tree edge are nested.
    // The innermost comes from the branch latest in the rotation at the
    // vertex where their paths split, so a DFS taking outgoing edges in
    // reverse rotation order meets them from outside in on the -1 side and
    // from inside out on the +1 side.
    let mut encounter = Vec::with_capacity(m);
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    for &root in t.roots() {
        stack.push((root, ring_out(root).len()));
        while let Some(top) = stack.last_mut() {
            let (v, pos) = *top;
            if pos == 0 {
                stack.pop();
                continue;
            }
            top.1 -= 1;
            let e = ring_out(v)[pos - 1];
            if t.is_tree(e) {
                let w = t.orient(e).1;
                stack.push((w, ring_out(w).len()));
            } else {
                encounter.push(e);
            }
        }
    }

    // Per outgoing tree edge, linked lists of the back-edges flanking it,
    // listed in rotation order.
    let mut left_head: Vec<Option<EdgeId>> = vec![None; m];
    let mut right_head: Vec<Option<EdgeId>> = vec![None; m];
    let mut next: Vec<Option<EdgeId>> = vec![None; m];
    for &f in encounter.iter().rev() {
        let anchor = t.init_anchor(f).ok_or_else(|| {
            Error::InternalInconsistency(format!("back-edge {} has no anchor", f + 1))
        })?;
        let head = match outcome.lambda[f] {
            -1 => &mut left_head[anchor],
            1 => &mut right_head[anchor],
            other => {
                return Err(Error::InternalInconsistency(format!(
                    "back-edge {} has side {other}",
                    f + 1
                )))
            }
        };
        next[f] = head.replace(f);
    }

    let mut offsets = Vec::with_capacity(g.vertex_count() + 1);
    offsets.push(0);
    let mut ring = Vec::with_capacity(2 * m);
    for v in 0..g.vertex_count() {
        if let Some(p) = t.parent_edge(v) {
            ring.push(g.half_at(p, v));
        }
        for &e in ring_out(v) {
            if t.is_tree(e) {
                let mut cur = left_head[e];
                while let Some(f) = cur {
                    ring.push(g.half_at(f, v));
                    cur = next[f];
                }
                ring.push(g.half_at(e, v));
                let mut cur = right_head[e];
                while let Some(f) = cur {
                    ring.push(g.half_at(f, v));
                    cur = next[f];
                }
            } else {
                ring.push(g.half_at(e, v));
            }
        }
        offsets.push(ring.len());
    }
    RotationSystem::from_parts(g, offsets, ring)
        .map_err(|e| Error::InternalInconsistency(format!("built rotation is malformed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrtest::test_planarity;
    use crate::tremaux::run_dfs;
    use crate::ttorder::tt_sort;
    use crate::{fixtures, Graph};

    fn embed(g: &Graph) -> RotationSystem {
        let t = run_dfs(g, 0).unwrap();
        let adj = tt_sort(&t);
        let o = test_planarity(&t, &adj);
        build_rotation(g, &t, &adj, &o).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let rot = embed(&g);
        let c = certify(&g, &rot);
        assert!(c.genus0);
        assert_eq!(c.total_faces(), 2);
    }

    #[test]
    fn example_graph_has_nine_faces() {
        let g = fixtures::worked_example();
        let rot = embed(&g);
        let c = certify(&g, &rot);
        assert!(c.genus0, "{c:?}");
        assert_eq!(c.total_faces(), 9);
    }

    #[test]
    fn k4_faces_are_triangles() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let rot = embed(&g);
        let faces = trace_faces(&g, &rot);
        assert_eq!(faces.count(), 4);
        assert!(faces.faces().all(|f| f.len() == 3));
    }

    #[test]
    fn single_edge_and_single_vertex() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let rot = embed(&g);
        let faces = trace_faces(&g, &rot);
        assert_eq!(faces.count(), 1);
        assert_eq!(faces.face(0).len(), 2);
        assert!(certify(&g, &rot).genus0);

        let g = Graph::new(1, &[]).unwrap();
        let rot = embed(&g);
        let c = certify(&g, &rot);
        assert!(c.genus0);
        assert_eq!(c.total_faces(), 1);
    }

    #[test]
    fn reversing_one_vertex_of_k4_breaks_planarity() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut lists = embed(&g).to_lists();
        lists[0].reverse();
        let rot = RotationSystem::from_lists(&g, lists).unwrap();
        assert_eq!(trace_faces(&g, &rot).count(), 2);
        assert!(!certify(&g, &rot).genus0);
    }

    #[test]
    fn text_round_trip() {
        let g = fixtures::worked_example();
        let rot = embed(&g);
        let text = rot.to_text(&g);
        assert_eq!(RotationSystem::parse(&g, &text).unwrap(), rot);
        assert!(RotationSystem::parse(&g, "1: 2/1\n").is_err());
    }

    #[test]
    fn loops_parse_as_adjacent_halves() {
        let g = EdgeList {
            n: 3,
            ends: vec![(0, 1), (1, 2), (2, 0), (0, 0)],
        };
        let rot = RotationSystem::parse(&g, "1: 2/1 1/4 1/4 3/3\n2: 1/1 3/2\n3: 2/2 1/3\n").unwrap();
        let c = certify(&g, &rot);
        assert!(c.genus0);
        assert_eq!(c.total_faces(), 3);
    }
}
