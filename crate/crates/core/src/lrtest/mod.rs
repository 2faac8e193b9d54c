//! The planarity test proper.
//!
//! Vertices are finished bottom-up, in the backtrack order of a DFS that takes
//! outgoing edges in sorted order. When a vertex `v` with entering tree edge
//! `e = (u, v)` is finished, the constraint system of `e` is built from those
//! of the outgoing edges of `v`: the first one is taken over, the others are
//! merged in one by one, and then every back-edge returning to `u` is
//! removed. A failed merge means the graph is not planar. Otherwise the side
//! constraints collected on the way give every back-edge a side.

mod constraint;
mod forest;
mod trace;

pub use constraint::{Conflict, ConstraintSystem, Counters, EntryArena, Stack, StackPair};
pub use forest::{extract_lambda, Contradiction, Relation, SignedForest};
pub use trace::{format_trace, Snapshot, TraceStep};

use crate::graph::{EdgeId, VertexId};
use crate::tremaux::TremauxData;
use crate::ttorder::{steered_dfs, SortedAdjacency, Visit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Planar,
    Nonplanar,
}

#[derive(Debug, Clone)]
pub struct LrOutcome {
    pub verdict: Verdict,
    /// Side of every back-edge (`-1` or `+1`) on a planar verdict; 0 for tree
    /// edges and for every edge on a non-planar verdict.
    pub lambda: Vec<i8>,
    /// For each tree edge, the back-edge with the highest return left in its
    /// constraint system once the edge was finished.
    pub ref_edge: Vec<Option<EdgeId>>,
    /// Vertex whose merge failed, on a non-planar verdict.
    pub conflict_at: Option<(VertexId, Conflict)>,
    pub forest: SignedForest,
    pub counters: Counters,
}

impl LrOutcome {
    pub fn is_planar(&self) -> bool {
        self.verdict == Verdict::Planar
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LrOptions {
    /// Run the full ordering check on every constraint system after each
    /// merge and deletion. Quadratic in the worst case; meant for tests.
    pub check_invariants: bool,
}

pub fn test_planarity(t: &TremauxData, adj: &SortedAdjacency) -> LrOutcome {
    run(t, adj, LrOptions::default(), None)
}

/// Same as [`test_planarity`], calling `hook` after each finished vertex.
pub fn test_planarity_traced(
    t: &TremauxData,
    adj: &SortedAdjacency,
    mut hook: impl FnMut(&TraceStep),
) -> LrOutcome {
    run(t, adj, LrOptions::default(), Some(&mut hook))
}

pub fn test_planarity_with(
    t: &TremauxData,
    adj: &SortedAdjacency,
    options: LrOptions,
) -> LrOutcome {
    run(t, adj, options, None)
}

fn run(
    t: &TremauxData,
    adj: &SortedAdjacency,
    options: LrOptions,
    mut hook: Option<&mut dyn FnMut(&TraceStep)>,
) -> LrOutcome {
    let m = t.edge_count();
    let n = t.vertex_count();
    let mut arena = EntryArena::new((0..m).map(|e| t.low_depth(e)).collect());
    let mut forest = SignedForest::new(m);
    let mut counters = Counters::default();
    let mut stored: Vec<Option<ConstraintSystem>> = vec![None; m];
    let mut ref_edge = vec![None; m];
    // First back-edge removed at each vertex that nothing returns below.
    let mut low_set_rep: Vec<Option<EdgeId>> = vec![None; n];
    let mut conflict_at = None;
    let tracing = hook.is_some();

    let mut order = Vec::with_capacity(n);
    steered_dfs(t, adj, |ev| {
        if let Visit::Leave(v) = ev {
            order.push(v);
        }
    });

    'vertices: for &v in &order {
        let Some(e) = t.parent_edge(v) else { continue };
        let u = t.orient(e).0;
        let mut cs = ConstraintSystem::default();
        for &ei in adj.out(v) {
            let cs_i = if t.is_tree(ei) {
                stored[ei].take().expect("child finished first")
            } else {
                counters.pairs_created += 1;
                arena.single(ei)
            };
            let a = arena.bottom_low(&cs).unwrap_or(t.depth(v));
            debug_assert!(cs.is_empty() || a == t.depth(t.vertex_low(v)));
            if let Err(c) = arena.merge_cs(&mut cs, cs_i, a, t.low_depth(ei), &mut forest, &mut counters) {
                conflict_at = Some((v, c));
                break 'vertices;
            }
            if options.check_invariants {
                if let Err(msg) = arena.check(&cs) {
                    panic!("constraint system of edge {e} broken after merge at vertex {v}: {msg}");
                }
            }
        }

        let before = tracing.then(|| trace::snapshot(t, &arena, &cs));
        let self_low = t.vertex_low(u) == u;
        let mut popped = 0;
        arena.delete_low(&mut cs, t.depth(u), &mut counters, |f| {
            popped += 1;
            // Everything returning to a vertex with no lower return forms its
            // low set; keep it on one side across all children.
            if self_low {
                match low_set_rep[u] {
                    None => low_set_rep[u] = Some(f),
                    Some(r) => forest
                        .link(r, f, Relation::Same)
                        .expect("low sets of separate children are unconstrained"),
                }
            }
        });
        if options.check_invariants {
            if let Err(msg) = arena.check(&cs) {
                panic!("constraint system of edge {e} broken after deletion: {msg}");
            }
        }
        if let (Some(before), Some(hook)) = (before, hook.as_mut()) {
            hook(&TraceStep {
                vertex: v + 1,
                edge: (u + 1, v + 1),
                merged: before,
                after_deletion: (popped > 0).then(|| trace::snapshot(t, &arena, &cs)),
            });
        }
        ref_edge[e] = arena.highest_return(&cs);
        stored[e] = Some(cs);
    }

    let verdict = if conflict_at.is_some() {
        Verdict::Nonplanar
    } else {
        Verdict::Planar
    };
    let lambda = match verdict {
        Verdict::Planar => extract_lambda(&mut forest, t.back_edges()),
        Verdict::Nonplanar => vec![0; m],
    };
    LrOutcome {
        verdict,
        lambda,
        ref_edge,
        conflict_at,
        forest,
        counters,
    }
}
