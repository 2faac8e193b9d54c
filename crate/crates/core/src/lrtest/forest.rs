//! Union-find with parity over back-edges.
//!
//! Every recorded link says two back-edges must get the same side or
//! opposite sides. Once the test has finished, every tree of the forest is
//! rooted at `+1` and the sides follow by parity.

use crate::graph::EdgeId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Same,
    Opposite,
}

impl Relation {
    fn parity(self) -> bool {
        self == Relation::Opposite
    }

    fn from_parity(p: bool) -> Self {
        if p {
            Relation::Opposite
        } else {
            Relation::Same
        }
    }
}

/// A link that contradicts the ones already recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contradiction {
    pub a: EdgeId,
    pub b: EdgeId,
    pub relation: Relation,
}

#[derive(Debug, Clone)]
pub struct SignedForest {
    parent: Vec<EdgeId>,
    // Parity of an element relative to its parent: true means opposite sides.
    flip: Vec<bool>,
    rank: Vec<u8>,
    links: Vec<(EdgeId, EdgeId, Relation)>,
}

impl SignedForest {
    /// Forest over element ids `0..len`, all unlinked.
    pub fn new(len: usize) -> Self {
        SignedForest {
            parent: (0..len).collect(),
            flip: vec![false; len],
            rank: vec![0; len],
            links: Vec::new(),
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: EdgeId) -> (EdgeId, bool) {
        let mut root = x;
        let mut parity = false;
        while self.parent[root] != root {
            parity ^= self.flip[root];
            root = self.parent[root];
        }
        // Compress: point every node on the path straight at the root.
        let mut cur = x;
        let mut cur_parity = parity;
        while self.parent[cur] != root && cur != root {
            let next = self.parent[cur];
            let next_parity = cur_parity ^ self.flip[cur];
            self.parent[cur] = root;
            self.flip[cur] = cur_parity;
            cur = next;
            cur_parity = next_parity;
        }
        (root, parity)
    }

    pub fn link(&mut self, a: EdgeId, b: EdgeId, relation: Relation) -> Result<(), Contradiction> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return if pa ^ pb == relation.parity() {
                Ok(())
            } else {
                Err(Contradiction { a, b, relation })
            };
        }
        self.links.push((a, b, relation));
        let p = pa ^ pb ^ relation.parity();
        let (child, root) = if self.rank[ra] < self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = root;
        self.flip[child] = p;
        if self.rank[child] == self.rank[root] {
            self.rank[root] += 1;
        }
        Ok(())
    }

    /// Relation implied between `a` and `b`, if they are connected.
    pub fn relation(&mut self, a: EdgeId, b: EdgeId) -> Option<Relation> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        (ra == rb).then(|| Relation::from_parity(pa ^ pb))
    }

    /// Links that joined two previously separate trees, in recording order.
    pub fn links(&self) -> &[(EdgeId, EdgeId, Relation)] {
        &self.links
    }
}

/// Sides of the given back-edges: each forest root gets `+1`, everything
/// else follows its parity to the root. Other ids are left at 0.
pub fn extract_lambda(
    forest: &mut SignedForest,
    back_edges: impl IntoIterator<Item = EdgeId>,
) -> Vec<i8> {
    let mut lambda = vec![0i8; forest.parent.len()];
    for e in back_edges {
        let (_, p) = forest.find(e);
        lambda[e] = if p { -1 } else { 1 };
    }
    lambda
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lone_and_independent_elements_are_positive() {
        let mut f = SignedForest::new(3);
        assert_eq!(extract_lambda(&mut f, [0, 1, 2]), vec![1, 1, 1]);
    }

    #[test]
    fn parity_composes() {
        let mut f = SignedForest::new(4);
        f.link(0, 1, Relation::Opposite).unwrap();
        f.link(1, 2, Relation::Opposite).unwrap();
        f.link(2, 3, Relation::Same).unwrap();
        assert_eq!(f.relation(0, 2), Some(Relation::Same));
        assert_eq!(f.relation(0, 3), Some(Relation::Same));
        assert_eq!(f.relation(1, 3), Some(Relation::Opposite));
        assert!(f.link(0, 3, Relation::Same).is_ok());
        assert_eq!(f.links().len(), 3);
        assert!(f.link(0, 3, Relation::Opposite).is_err());
        let l = extract_lambda(&mut f, 0..4);
        assert_eq!(l[0], l[2]);
        assert_eq!(l[0], -l[1]);
    }

    proptest! {
        #[test]
        fn lambda_satisfies_every_accepted_link(
            links in proptest::collection::vec((0usize..12, 0usize..12, any::<bool>()), 0..40)
        ) {
            let mut f = SignedForest::new(12);
            let mut accepted = Vec::new();
            for (a, b, opp) in links {
                let rel = if opp { Relation::Opposite } else { Relation::Same };
                if f.link(a, b, rel).is_ok() {
                    accepted.push((a, b, rel));
                }
            }
            let l = extract_lambda(&mut f, 0..12);
            for (a, b, rel) in accepted {
                prop_assert_eq!(l[a] == l[b], rel == Relation::Same);
            }
        }
    }
}
