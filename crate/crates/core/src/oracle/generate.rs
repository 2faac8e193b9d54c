//! Deterministic graph generators. Random kinds draw from a ChaCha8 stream
//! seeded with `seed_from_u64`.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Every edge of `base` replaced by a path with `k` internal vertices.
    Subdivide { base: Box<GenSpec>, k: usize },
    /// Grown from a triangle by inserting each new vertex into a uniformly
    /// chosen face, the outer one included. Maximal planar: `m = 3n - 6`.
    Triangulation { n: usize, seed: u64 },
    /// Uniform spanning tree plus distinct random extra edges. Simple.
    RandomConnected { n: usize, m: usize, seed: u64 },
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let invalid = |msg: &str| Err(Error::InvalidSpec(msg.to_string()));
    match *spec {
        GenSpec::Complete(n) => {
            if n == 0 {
                return invalid("complete graph needs n >= 1");
            }
            let mut es = Vec::with_capacity(n * (n - 1) / 2);
            for i in 0..n {
                for j in i + 1..n {
                    es.push((i, j));
                }
            }
            Graph::new(n, &es)
        }
        GenSpec::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return invalid("complete bipartite graph needs both sides non-empty");
            }
            let mut es = Vec::with_capacity(a * b);
            for i in 0..a {
                for j in 0..b {
                    es.push((i, a + j));
                }
            }
            Graph::new(a + b, &es)
        }
        GenSpec::Subdivide { ref base, k } => Ok(subdivide(&generate(base)?, k)),
        GenSpec::Triangulation { n, seed } => {
            if n < 3 {
                return invalid("triangulation needs n >= 3");
            }
            Ok(triangulation(n, seed))
        }
        GenSpec::RandomConnected { n, m, seed } => {
            if n == 0 {
                return invalid("random graph needs n >= 1");
            }
            let max = n * (n - 1) / 2;
            if m + 1 < n || m > max {
                return invalid(&format!("{m} edges do not fit a simple connected graph on {n} vertices"));
            }
            Ok(random_connected(n, m, seed))
        }
    }
}

/// Replaces every edge by a path with `k` internal vertices. The new vertices
/// of edge `e` are numbered `n + e*k ..`, in order from its first endpoint.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    let n = g.vertex_count();
    let mut es = Vec::with_capacity(g.edge_count() * (k + 1));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut prev = u;
        for i in 0..k {
            let w = n + e * k + i;
            es.push((prev, w));
            prev = w;
        }
        es.push((prev, v));
    }
    Graph::new(n + g.edge_count() * k, &es).expect("subdivision of a valid graph")
}

fn triangulation(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut es = Vec::with_capacity(3 * n - 6);
    es.extend([(0, 1), (1, 2), (2, 0)]);
    let mut faces: Vec<[VertexId; 3]> = Vec::with_capacity(2 * n - 4);
    faces.push([0, 1, 2]);
    faces.push([0, 2, 1]);
    for x in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        es.extend([(a, x), (b, x), (c, x)]);
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
    }
    Graph::new(n, &es).expect("triangulation edges are valid")
}

fn random_connected(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut es = random_tree(n, &mut rng);
    let key = |u: VertexId, v: VertexId| (u.min(v), u.max(v));
    let mut present: HashSet<(VertexId, VertexId)> = es.iter().map(|&(u, v)| key(u, v)).collect();
    let extra = m - es.len();
    let max = n * (n - 1) / 2;
    if 2 * m >= max {
        let mut free: Vec<(VertexId, VertexId)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|p| !present.contains(p))
            .collect();
        let (chosen, _) = free.partial_shuffle(&mut rng, extra);
        es.extend_from_slice(chosen);
    } else {
        while es.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert(key(u, v)) {
                es.push((u, v));
            }
        }
    }
    es.shuffle(&mut rng);
    for e in &mut es {
        if rng.gen::<bool>() {
            *e = (e.1, e.0);
        }
    }
    Graph::new(n, &es).expect("random edges are valid")
}

/// Uniform labeled tree, decoded from a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    if n < 2 {
        return Vec::new();
    }
    let seq: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut es = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &s in &seq {
        es.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    es.push((leaf, n - 1));
    es
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let g = generate(&GenSpec::Triangulation { n: 100, seed: 1 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (100, 294));
        assert!(g.is_simple() && g.is_connected());

        let k5 = Box::new(GenSpec::Complete(5));
        let g = generate(&GenSpec::Subdivide { base: k5, k: 1 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (15, 20));

        let g = generate(&GenSpec::CompleteBipartite(3, 3)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        assert!((0..6).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn random_connected_is_simple_connected_and_seeded() {
        for (n, m) in [(1, 0), (2, 1), (7, 6), (7, 12), (7, 21), (50, 120)] {
            let spec = GenSpec::RandomConnected { n, m, seed: 9 };
            let g = generate(&spec).unwrap();
            assert_eq!(g.edge_count(), m);
            assert!(g.is_simple() && g.is_connected());
            assert_eq!(g.edges(), generate(&spec).unwrap().edges());
        }
    }

    #[test]
    fn prufer_trees_are_spanning() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..40 {
            let es = random_tree(n, &mut rng);
            let g = Graph::new(n, &es).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), n - 1);
        }
    }

    #[test]
    fn bad_specs() {
        for spec in [
            GenSpec::Complete(0),
            GenSpec::CompleteBipartite(0, 3),
            GenSpec::Triangulation { n: 2, seed: 0 },
            GenSpec::RandomConnected { n: 5, m: 3, seed: 0 },
            GenSpec::RandomConnected { n: 5, m: 11, seed: 0 },
        ] {
            assert!(matches!(generate(&spec), Err(Error::InvalidSpec(_))));
        }
    }
}
