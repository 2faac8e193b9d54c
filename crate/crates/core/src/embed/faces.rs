//! Face tracing and the Euler-formula certificate.
//!
//! The face successor of a half-edge `h` is the rotation successor of
//! `twin(h)`. With rotations read counterclockwise this walks every face
//! clockwise; the face count is the same either way.

use super::{Endpoints, RotationSystem};
use crate::graph::HalfEdge;

#[derive(Debug, Clone)]
pub struct FaceTrace {
    offsets: Vec<usize>,
    walk: Vec<HalfEdge>,
}

impl FaceTrace {
    pub fn count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn face(&self, i: usize) -> &[HalfEdge] {
        &self.walk[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn faces(&self) -> impl Iterator<Item = &[HalfEdge]> {
        (0..self.count()).map(|i| self.face(i))
    }
}

pub fn trace_faces<G: Endpoints + ?Sized>(g: &G, rot: &RotationSystem) -> FaceTrace {
    let halves = 2 * g.edge_count();
    let mut succ = vec![HalfEdge::from_index(0); halves];
    for v in 0..g.vertex_count() {
        let ring = rot.at(v);
        for (i, &h) in ring.iter().enumerate() {
            succ[h.index()] = ring[(i + 1) % ring.len()];
        }
    }
    let mut seen = vec![false; halves];
    let mut offsets = vec![0];
    let mut walk = Vec::with_capacity(halves);
    for start in 0..halves {
        if seen[start] {
            continue;
        }
        let mut h = HalfEdge::from_index(start);
        while !seen[h.index()] {
            seen[h.index()] = true;
            walk.push(h);
            h = succ[h.twin().index()];
        }
        offsets.push(walk.len());
    }
    FaceTrace { offsets, walk }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentEuler {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl ComponentEuler {
    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertResult {
    /// True when every component satisfies `n - m + f = 2`.
    pub genus0: bool,
    pub components: Vec<ComponentEuler>,
}

impl CertResult {
    pub fn total_faces(&self) -> usize {
        self.components.iter().map(|c| c.faces).sum()
    }
}

/// Per-component Euler check. Components without edges count one face.
pub fn certify<G: Endpoints + ?Sized>(g: &G, rot: &RotationSystem) -> CertResult {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut index = vec![usize::MAX; n];
    let mut components = Vec::new();
    let mut comp_of = vec![0; n];
    for (v, comp) in comp_of.iter_mut().enumerate() {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = components.len();
            components.push(ComponentEuler {
                vertices: 0,
                edges: 0,
                faces: 0,
            });
        }
        *comp = index[r];
        components[index[r]].vertices += 1;
    }
    for e in 0..g.edge_count() {
        components[comp_of[g.endpoints(e).0]].edges += 1;
    }
    let faces = trace_faces(g, rot);
    for face in faces.faces() {
        let v = g.origin(face[0]);
        components[comp_of[v]].faces += 1;
    }
    for c in &mut components {
        if c.edges == 0 {
            c.faces = 1;
        }
    }
    CertResult {
        genus0: components.iter().all(|c| c.characteristic() == 2),
        components,
    }
}
