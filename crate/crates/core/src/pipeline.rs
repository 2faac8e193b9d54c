//! The whole pipeline on one graph, connected or not.
//!
//! Before the real work the graph is renumbered: vertices in DFS preorder,
//! edges grouped by the vertex they leave in the DFS. The incidence order
//! around every vertex is kept, so the DFS tree, the verdict and the
//! embedding are exactly those of the original numbering. Every later pass
//! then walks its arrays nearly sequentially instead of at random, which
//! matters far more than instruction counts once the graph outgrows the
//! caches. Results are mapped back before they are returned.

use crate::embed::{build_rotation, certify, CertResult, RotationSystem};
use crate::error::Result;
use crate::graph::{EdgeId, Graph, HalfEdge, VertexId};
use crate::lrtest::{test_planarity, Conflict, Counters, Verdict};
use crate::tremaux::run_dfs_forest;
use crate::ttorder::tt_sort;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub verdict: Verdict,
    /// Side of every back-edge on a planar verdict, 0 elsewhere.
    pub lambda: Vec<i8>,
    /// Vertex whose merge failed, on a non-planar verdict.
    pub conflict_at: Option<(VertexId, Conflict)>,
    pub counters: Counters,
    /// Present on a planar verdict.
    pub rotation: Option<RotationSystem>,
}

impl Analysis {
    pub fn is_planar(&self) -> bool {
        self.verdict == Verdict::Planar
    }

    pub fn certify(&self, g: &Graph) -> Option<CertResult> {
        self.rotation.as_ref().map(|r| certify(g, r))
    }
}

/// Tests `g` and, if it is planar, embeds it. One DFS is rooted in every
/// component.
pub fn analyze(g: &Graph) -> Result<Analysis> {
    let (vertex_new, edge_new) = dfs_layout(g);
    let h = g.relabeled(&vertex_new, &edge_new);

    let tree = run_dfs_forest(&h);
    let adj = tt_sort(&tree);
    let outcome = test_planarity(&tree, &adj);
    let rotation = if outcome.is_planar() {
        Some(build_rotation(&h, &tree, &adj, &outcome)?)
    } else {
        None
    };

    let mut vertex_old = vec![0; vertex_new.len()];
    for (v, &w) in vertex_new.iter().enumerate() {
        vertex_old[w] = v;
    }
    let mut edge_old = vec![0; edge_new.len()];
    for (e, &f) in edge_new.iter().enumerate() {
        edge_old[f] = e;
    }
    let lambda = edge_new.iter().map(|&f| outcome.lambda[f]).collect();
    let rotation = match rotation {
        Some(rot) => {
            let mut offsets = Vec::with_capacity(g.vertex_count() + 1);
            offsets.push(0);
            let mut ring = Vec::with_capacity(2 * g.edge_count());
            for &w in &vertex_new {
                ring.extend(
                    rot.at(w)
                        .iter()
                        .map(|h| HalfEdge::new(edge_old[h.edge()], h.is_at_head())),
                );
                offsets.push(ring.len());
            }
            Some(RotationSystem::from_parts(g, offsets, ring)?)
        }
        None => None,
    };
    Ok(Analysis {
        verdict: outcome.verdict,
        lambda,
        conflict_at: outcome.conflict_at.map(|(v, c)| (vertex_old[v], c)),
        counters: outcome.counters,
        rotation,
    })
}

/// Verdict only, skipping the embedding.
pub fn is_planar(g: &Graph) -> bool {
    let tree = run_dfs_forest(g);
    let adj = tt_sort(&tree);
    test_planarity(&tree, &adj).is_planar()
}

/// New numbers for a DFS-friendly layout: vertices in preorder of the same
/// DFS the pipeline runs, edges grouped by the vertex they are first
/// traversed from, in incidence order there.
fn dfs_layout(g: &Graph) -> (Vec<VertexId>, Vec<EdgeId>) {
    const NONE: usize = usize::MAX;
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut vertex_new = vec![NONE; n];
    let mut tail = vec![NONE; m];
    let mut preorder = Vec::with_capacity(n);
    let mut stack: Vec<(VertexId, usize)> = Vec::new();
    for root in 0..n {
        if vertex_new[root] != NONE {
            continue;
        }
        vertex_new[root] = preorder.len();
        preorder.push(root);
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let (v, pos) = *top;
            let inc = g.incidence(v);
            if pos == inc.len() {
                stack.pop();
                continue;
            }
            top.1 += 1;
            let e = inc[pos].edge();
            if tail[e] != NONE {
                continue;
            }
            tail[e] = v;
            let w = g.target(inc[pos]);
            if vertex_new[w] == NONE {
                vertex_new[w] = preorder.len();
                preorder.push(w);
                stack.push((w, 0));
            }
        }
    }
    let mut edge_new = vec![NONE; m];
    let mut next = 0;
    for &v in &preorder {
        for h in g.incidence(v) {
            if tail[h.edge()] == v {
                edge_new[h.edge()] = next;
                next += 1;
            }
        }
    }
    (vertex_new, edge_new)
}
