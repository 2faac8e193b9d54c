//! Named graphs shared by tests, benchmarks and the CLI.

use crate::graph::Graph;

/// The ten-vertex sample graph whose constraint-stack trace is worked out by
/// hand in the literature on this algorithm.
///
/// The edge order makes a DFS from vertex 1 produce tree edges
/// (1,2),(2,3),(3,4),(4,5),(4,6),(6,7),(7,8),(8,9),(8,10) and back-edges
/// (5,1),(5,2),(6,3),(7,3),(9,6),(9,7),(10,6),(10,7). At vertex 6 the tree
/// edge (6,7) precedes the back-edge (6,3); both have the same sort key, so
/// this order decides how the two low-3 edges stack in CS((4,6)).
pub const WORKED_EXAMPLE_EDGES: [(usize, usize); 17] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (4, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (8, 10),
    (5, 1),
    (5, 2),
    (6, 3),
    (7, 3),
    (9, 6),
    (9, 7),
    (10, 6),
    (10, 7),
];

pub fn worked_example() -> Graph {
    Graph::from_one_based(10, &WORKED_EXAMPLE_EDGES).expect("fixture is well formed")
}
