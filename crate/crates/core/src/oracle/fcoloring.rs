//! Literal check of the strong coloring conditions, by subtree scans.
//!
//! For a vertex `v` and outgoing edges `e1 != e2`, `Interlaced(e1, e2)` is the
//! set of back-edges of the fringe of `e1` whose low lies strictly above
//! `low(e2)`. Both interlace sets of every pair must be monochromatic and,
//! when both are non-empty, of different colors. In addition every low set
//! `L(v)` must be monochromatic.

use crate::graph::{EdgeId, Graph, VertexId};
use crate::tremaux::TremauxData;

pub fn check_strong_fcoloring(g: &Graph, t: &TremauxData, lambda: &[i8]) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    let parent = |v: VertexId| t.parent_edge(v).map(|p| t.orient(p).0);
    let mut depth = vec![0usize; n];
    for (v, d) in depth.iter_mut().enumerate() {
        let mut u = v;
        while let Some(p) = parent(u) {
            *d += 1;
            u = p;
        }
    }
    // Back-edges whose tail lies in the subtree of each vertex.
    let mut above: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    let back: Vec<EdgeId> = (0..m).filter(|&e| !t.is_tree(e)).collect();
    for &f in &back {
        if !matches!(lambda.get(f), Some(1 | -1)) {
            return false;
        }
        let mut u = Some(t.orient(f).0);
        while let Some(x) = u {
            above[x].push(f);
            u = parent(x);
        }
    }
    let head_depth = |f: EdgeId| depth[t.orient(f).1];

    // Fringe and low (as a depth) of an outgoing edge of `v`.
    let fringe = |v: VertexId, e: EdgeId| -> (Vec<EdgeId>, usize) {
        let (x, y) = t.orient(e);
        debug_assert_eq!(x, v);
        if !t.is_tree(e) {
            return (vec![e], head_depth(e));
        }
        let fr: Vec<EdgeId> = above[y]
            .iter()
            .copied()
            .filter(|&f| head_depth(f) < depth[v])
            .collect();
        let low = fr.iter().map(|&f| head_depth(f)).min().unwrap_or(depth[v]);
        (fr, low)
    };
    let mono = |set: &[EdgeId]| set.windows(2).all(|w| lambda[w[0]] == lambda[w[1]]);

    for v in 0..n {
        let out: Vec<EdgeId> = g
            .incidence(v)
            .iter()
            .map(|h| h.edge())
            .filter(|&e| t.orient(e).0 == v)
            .collect();
        let info: Vec<_> = out.iter().map(|&e| fringe(v, e)).collect();
        for i in 0..out.len() {
            for j in 0..out.len() {
                if i == j {
                    continue;
                }
                let a: Vec<EdgeId> = info[i].0.iter().copied().filter(|&f| head_depth(f) > info[j].1).collect();
                let b: Vec<EdgeId> = info[j].0.iter().copied().filter(|&f| head_depth(f) > info[i].1).collect();
                if !mono(&a) || !mono(&b) {
                    return false;
                }
                if let (Some(&fa), Some(&fb)) = (a.first(), b.first()) {
                    if lambda[fa] == lambda[fb] {
                        return false;
                    }
                }
            }
        }

        // L(v): back-edges from the subtree of v returning to its lowest point.
        let low_v = above[v].iter().map(|&f| head_depth(f)).min().unwrap_or(depth[v]).min(depth[v]);
        let low_set: Vec<EdgeId> = above[v].iter().copied().filter(|&f| head_depth(f) == low_v).collect();
        if !mono(&low_set) {
            return false;
        }
    }
    true
}
