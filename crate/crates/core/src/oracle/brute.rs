//! Planarity by exhaustive search over rotation systems.
//!
//! A graph is planar iff some rotation system gives every component
//! `f_c = 2 - n_c + m_c` faces. Vertices are assigned one at a time, the
//! first half-edge of each fixed; a partial assignment is abandoned once the
//! faces already closed, plus the most faces the open half-edges could still
//! form, fall short of the target. A face of length 2 needs a parallel edge
//! or a single-edge component, so in other graphs every face has length at
//! least 3.

use crate::error::{Error, Result};
use crate::graph::{Graph, HalfEdge};

/// Upper bound on the number of rotation systems [`brute_planar`] accepts.
pub const ROTATION_LIMIT: u128 = 10_000_000;

/// `prod_v max(1, (deg(v) - 1)!)`, saturating.
pub fn rotation_count(g: &Graph) -> u128 {
    let mut total: u128 = 1;
    for v in 0..g.vertex_count() {
        for k in 2..g.degree(v) as u128 {
            total = total.saturating_mul(k);
        }
    }
    total
}

pub fn brute_planar(g: &Graph) -> Result<bool> {
    let count = rotation_count(g);
    if count > ROTATION_LIMIT {
        return Err(Error::TooLarge(count));
    }
    let mut target = 0;
    let mut min_face = if g.is_simple() { 3 } else { 2 };
    for comp in g.connected_components() {
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if edges > 0 {
            target += 2 + edges - comp.len();
        }
        if edges == 1 {
            min_face = 2;
        }
    }
    if g.edge_count() == 0 {
        return Ok(true);
    }
    let mut search = Search {
        g,
        rings: assignment_order(g)
            .into_iter()
            .map(|v| g.incidence(v).to_vec())
            .collect(),
        assigned: vec![false; g.vertex_count()],
        rot_next: vec![HalfEdge::from_index(0); 2 * g.edge_count()],
        stamp: vec![0; 2 * g.edge_count()],
        walk: 0,
        target,
        min_face,
    };
    Ok(search.run(0))
}

struct Search<'a> {
    g: &'a Graph,
    rings: Vec<Vec<HalfEdge>>,
    assigned: Vec<bool>,
    // Successor of each half-edge in the rotation at its origin.
    rot_next: Vec<HalfEdge>,
    stamp: Vec<u64>,
    walk: u64,
    target: usize,
    min_face: usize,
}

impl Search<'_> {
    fn run(&mut self, k: usize) -> bool {
        if k == self.rings.len() {
            return self.face_bound() == self.target;
        }
        let ring = self.rings[k].clone();
        let v = self.g.origin(ring[0]);
        self.assigned[v] = true;
        let mut perm: Vec<usize> = (1..ring.len()).collect();
        loop {
            let mut prev = ring[0];
            for &i in &perm {
                self.rot_next[prev.index()] = ring[i];
                prev = ring[i];
            }
            self.rot_next[prev.index()] = ring[0];
            if self.face_bound() >= self.target && self.run(k + 1) {
                return true;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        self.assigned[v] = false;
        false
    }

    /// Upper bound on the faces any completion can have; exact once every
    /// vertex is assigned. Half-edges leaving an unassigned vertex start
    /// maximal partial walks; everything else lies on a closed face. A walk of
    /// at least `min_face` half-edges ends up in one face at most, shorter
    /// ones have to pool.
    fn face_bound(&mut self) -> usize {
        let darts = self.rot_next.len();
        // Stamps above `base` were set during this call.
        let base = self.walk;
        self.walk += 1;
        let mark = self.walk;
        let mut long = 0;
        let mut short_darts = 0;
        for start in 0..darts {
            let mut h = HalfEdge::from_index(start);
            if self.assigned[self.g.origin(h)] {
                continue;
            }
            let mut len = 0;
            loop {
                self.stamp[h.index()] = mark;
                len += 1;
                let twin = h.twin();
                if !self.assigned[self.g.origin(twin)] {
                    break;
                }
                h = self.rot_next[twin.index()];
            }
            if len >= self.min_face {
                long += 1;
            } else {
                short_darts += len;
            }
        }
        let mut closed = 0;
        for start in 0..darts {
            if self.stamp[start] > base {
                continue;
            }
            closed += 1;
            let mut h = HalfEdge::from_index(start);
            while self.stamp[h.index()] <= base {
                self.stamp[h.index()] = mark;
                h = self.rot_next[h.twin().index()];
            }
        }
        closed + long + short_darts / self.min_face
    }
}

/// Non-isolated vertices. Those of degree at most 2 have a single rotation
/// and go first; after them, each next vertex is the one with the most
/// already chosen neighbours, so that faces close as early as possible.
fn assignment_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut chosen = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for v in (0..n).filter(|&v| (1..=2).contains(&g.degree(v))) {
        chosen[v] = true;
        order.push(v);
        for &h in g.incidence(v) {
            links[g.target(h)] += 1;
        }
    }
    loop {
        let pick = (0..n)
            .filter(|&v| !chosen[v] && g.degree(v) > 0)
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)));
        let Some(v) = pick else { break };
        chosen[v] = true;
        order.push(v);
        for &h in g.incidence(v) {
            links[g.target(h)] += 1;
        }
    }
    order
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
