//! Constraint systems: stacks of pairs of top-to-bottom linked stacks of
//! back-edges.
//!
//! All entries of one stack must end up on the same side; the two stacks of
//! a pair must end up on opposite sides; different pairs are unconstrained.
//! Entries are back-edge ids, and the links between them live in a shared
//! [`EntryArena`], so stacks can be concatenated in constant time. Every
//! stack is non-decreasing in low depth from bottom to top, and the pairs of a
//! system are ordered: each pair's entries are no deeper than the next pair's.

use super::forest::{Relation, SignedForest};
use crate::graph::EdgeId;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stack {
    top: Option<EdgeId>,
    bottom: Option<EdgeId>,
}

impl Stack {
    pub fn is_empty(&self) -> bool {
        self.top.is_none()
    }

    pub fn top(&self) -> Option<EdgeId> {
        self.top
    }

    pub fn bottom(&self) -> Option<EdgeId> {
        self.bottom
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StackPair {
    pub s0: Stack,
    pub s1: Stack,
}

impl StackPair {
    fn flip(&mut self) {
        std::mem::swap(&mut self.s0, &mut self.s1);
    }

    pub fn is_empty(&self) -> bool {
        self.s0.is_empty() && self.s1.is_empty()
    }

    fn is_two_sided(&self) -> bool {
        !self.s0.is_empty() && !self.s1.is_empty()
    }

    /// The non-empty stack of a one-sided pair.
    fn only_side(&self) -> Stack {
        if self.s0.is_empty() {
            self.s1
        } else {
            self.s0
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub pairs: Vec<StackPair>,
}

impl ConstraintSystem {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Why a merge failed: the coloring constraints have no solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conflict {
    /// A pair above the interlacing boundary has entries on both sides.
    TwoSidedAboveBoundary,
    /// The boundary pair returns above `low(e_i)` on both sides.
    BoundaryPairBothSides,
    /// A pair of the incoming system has entries on both sides.
    TwoSidedIncoming,
}

/// Per-back-edge link storage shared by all constraint systems of a run.
#[derive(Debug, Clone)]
pub struct EntryArena {
    below: Vec<Option<EdgeId>>,
    low_depth: Vec<u32>,
    // Emptied pair vectors, reused to avoid an allocation per back-edge.
    spare: Vec<Vec<StackPair>>,
}

/// Counters kept across a run, used to check the linear-work bounds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub pairs_created: usize,
    pub pairs_fused: usize,
    pub deletions: usize,
}

impl EntryArena {
    /// Arena over ids `0..low_depth.len()`; `low_depth[e]` is the depth of
    /// the low vertex of back-edge `e` (ignored for other ids).
    pub fn new(low_depth: Vec<u32>) -> Self {
        EntryArena {
            below: vec![None; low_depth.len()],
            low_depth,
            spare: Vec::new(),
        }
    }

    #[inline]
    pub fn low_depth(&self, e: EdgeId) -> u32 {
        self.low_depth[e]
    }

    pub fn below(&self, e: EdgeId) -> Option<EdgeId> {
        self.below[e]
    }

    fn top_low(&self, s: Stack) -> Option<u32> {
        s.top.map(|e| self.low_depth[e])
    }

    /// Constraint system holding the single back-edge `e`.
    pub fn single(&mut self, e: EdgeId) -> ConstraintSystem {
        self.below[e] = None;
        let mut pairs = self.spare.pop().unwrap_or_default();
        pairs.push(StackPair {
            s0: Stack {
                top: Some(e),
                bottom: Some(e),
            },
            s1: Stack::default(),
        });
        ConstraintSystem { pairs }
    }

    fn recycle(&mut self, mut pairs: Vec<StackPair>) {
        if pairs.capacity() > 0 {
            pairs.clear();
            self.spare.push(pairs);
        }
    }

    /// Puts `upper` on top of `lower`, linking the seam.
    fn concat(
        &mut self,
        lower: Stack,
        upper: Stack,
        forest: &mut SignedForest,
    ) -> Stack {
        match (lower.top, upper.bottom) {
            (None, _) => upper,
            (_, None) => lower,
            (Some(lt), Some(ub)) => {
                debug_assert!(self.low_depth[lt] <= self.low_depth[ub]);
                self.below[ub] = Some(lt);
                forest
                    .link(lt, ub, Relation::Same)
                    .expect("stack seams never contradict");
                Stack {
                    top: upper.top,
                    bottom: lower.bottom,
                }
            }
        }
    }

    /// Adds `content` on top of `pair.s1`, linking it to whatever the pair
    /// already holds.
    fn add_to_s1(&mut self, pair: &mut StackPair, content: Stack, forest: &mut SignedForest) {
        let Some(cb) = content.bottom else { return };
        if pair.s1.is_empty() {
            if let Some(t0) = pair.s0.top {
                forest
                    .link(t0, cb, Relation::Opposite)
                    .expect("opposite link across a one-sided pair never contradicts");
            }
        }
        pair.s1 = self.concat(pair.s1, content, forest);
    }

    /// Merges the constraint system of `e_i` into that of `e`, adding the
    /// interlacing constraints between `e_i` and the edges merged before it.
    ///
    /// `a` is the depth of the lowest return of everything merged so far,
    /// `b` the depth of `low(e_i)`, with `a <= b`.
    pub fn merge_cs(
        &mut self,
        cs_e: &mut ConstraintSystem,
        cs_ei: ConstraintSystem,
        a: u32,
        b: u32,
        forest: &mut SignedForest,
        counters: &mut Counters,
    ) -> Result<(), Conflict> {
        if cs_ei.is_empty() {
            self.recycle(cs_ei.pairs);
            return Ok(());
        }
        if cs_e.is_empty() {
            let old = std::mem::replace(cs_e, cs_ei);
            self.recycle(old.pairs);
            return Ok(());
        }
        debug_assert!(a <= b);
        debug_assert_eq!(self.bottom_low(cs_e), Some(a));
        debug_assert_eq!(self.bottom_low(&cs_ei), Some(b));

        // Everything above the boundary returns strictly above b and must
        // share one side.
        let k = cs_e.pairs.len();
        let mut j = k;
        while j > 0 {
            let p = cs_e.pairs[j - 1];
            let above = |s: Stack| self.top_low(s).is_some_and(|d| d > b);
            if above(p.s0) || above(p.s1) {
                j -= 1;
            } else {
                break;
            }
        }
        if j < k {
            if cs_e.pairs[j + 1..].iter().any(StackPair::is_two_sided) {
                return Err(Conflict::TwoSidedAboveBoundary);
            }
            let boundary = &mut cs_e.pairs[j];
            let above0 = self.top_low(boundary.s0).is_some_and(|d| d > b);
            let above1 = self.top_low(boundary.s1).is_some_and(|d| d > b);
            if above0 && above1 {
                return Err(Conflict::BoundaryPairBothSides);
            }
            if above1 {
                boundary.flip();
            }
            let mut fused = cs_e.pairs[j].s0;
            for idx in j + 1..k {
                let side = cs_e.pairs[idx].only_side();
                fused = self.concat(fused, side, forest);
                counters.pairs_fused += 1;
            }
            cs_e.pairs[j].s0 = fused;
            cs_e.pairs.truncate(j + 1);
        }

        // Incoming side: the bottom pair holds exactly the edges returning to
        // a when b == a; everything else must share one side.
        let incoming = cs_ei.pairs;
        let result = self.merge_incoming(cs_e, &incoming, a == b, j < k, j, forest, counters);
        self.recycle(incoming);
        result
    }

    #[allow(clippy::too_many_arguments)]
    fn merge_incoming(
        &mut self,
        cs_e: &mut ConstraintSystem,
        incoming: &[StackPair],
        equal_low: bool,
        has_boundary: bool,
        j: usize,
        forest: &mut SignedForest,
        counters: &mut Counters,
    ) -> Result<(), Conflict> {
        let mut rest = incoming;
        if equal_low {
            let first = rest[0];
            rest = &rest[1..];
            if first.is_two_sided() {
                return Err(Conflict::TwoSidedIncoming);
            }
            let low_set = first.only_side();
            let bottom = &mut cs_e.pairs[0];
            debug_assert!(!bottom.is_two_sided(), "bottom pair is one-sided");
            if bottom.s0.is_empty() {
                bottom.flip();
            }
            let s0 = bottom.s0;
            cs_e.pairs[0].s0 = self.concat(s0, low_set, forest);
            counters.pairs_fused += 1;
        }
        let mut content = Stack::default();
        for pair in rest {
            if pair.is_two_sided() {
                return Err(Conflict::TwoSidedIncoming);
            }
            content = self.concat(content, pair.only_side(), forest);
        }
        if content.is_empty() {
            return Ok(());
        }
        if has_boundary {
            let mut boundary = cs_e.pairs[j];
            self.add_to_s1(&mut boundary, content, forest);
            cs_e.pairs[j] = boundary;
            counters.pairs_fused += rest.len();
        } else {
            cs_e.pairs.push(StackPair {
                s0: content,
                s1: Stack::default(),
            });
            counters.pairs_fused += rest.len() - 1;
        }
        Ok(())
    }

    /// Removes every entry returning to depth `u_depth`. Such entries sit on
    /// the tops of the topmost pairs. Calls `on_pop` for each removed entry.
    pub fn delete_low(
        &mut self,
        cs: &mut ConstraintSystem,
        u_depth: u32,
        counters: &mut Counters,
        mut on_pop: impl FnMut(EdgeId),
    ) {
        while let Some(pair) = cs.pairs.last_mut() {
            for s in [&mut pair.s0, &mut pair.s1] {
                while let Some(e) = s.top {
                    if self.low_depth[e] != u_depth {
                        break;
                    }
                    s.top = self.below[e];
                    if s.top.is_none() {
                        s.bottom = None;
                    }
                    counters.deletions += 1;
                    on_pop(e);
                }
            }
            if pair.is_empty() {
                cs.pairs.pop();
            } else {
                break;
            }
        }
    }

    /// Lowest return depth in the system (the bottom of the bottom pair).
    pub fn bottom_low(&self, cs: &ConstraintSystem) -> Option<u32> {
        let p = cs.pairs.first()?;
        [p.s0.bottom, p.s1.bottom]
            .into_iter()
            .flatten()
            .map(|e| self.low_depth[e])
            .min()
    }

    /// Entry with the highest return among the tops of the top pair.
    pub fn highest_return(&self, cs: &ConstraintSystem) -> Option<EdgeId> {
        let p = cs.pairs.last()?;
        match (p.s0.top, p.s1.top) {
            (Some(x), Some(y)) => Some(if self.low_depth[y] > self.low_depth[x] { y } else { x }),
            (x, y) => x.or(y),
        }
    }

    /// Entries of a stack, bottom first.
    pub fn entries(&self, s: Stack) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut cur = s.top;
        while let Some(e) = cur {
            out.push(e);
            cur = self.below[e];
        }
        debug_assert_eq!(out.last().copied(), s.bottom);
        out.reverse();
        out
    }

    /// Both stacks of every pair, bottom pair first and each stack bottom first.
    pub fn snapshot(&self, cs: &ConstraintSystem) -> Vec<[Vec<EdgeId>; 2]> {
        cs.pairs
            .iter()
            .map(|p| [self.entries(p.s0), self.entries(p.s1)])
            .collect()
    }

    /// Checks the ordering invariants of a whole system. Linear in its size.
    pub fn check(&self, cs: &ConstraintSystem) -> Result<(), String> {
        let mut prev_max: Option<u32> = None;
        for (i, p) in cs.pairs.iter().enumerate() {
            if p.is_empty() {
                return Err(format!("pair {} is empty", i + 1));
            }
            let mut pair_min = u32::MAX;
            let mut pair_max = 0;
            for s in [p.s0, p.s1] {
                let es = self.entries(s);
                for w in es.windows(2) {
                    if self.low_depth[w[0]] > self.low_depth[w[1]] {
                        return Err(format!("pair {} has a decreasing stack", i + 1));
                    }
                }
                for &e in &es {
                    pair_min = pair_min.min(self.low_depth[e]);
                    pair_max = pair_max.max(self.low_depth[e]);
                }
            }
            if let Some(pm) = prev_max {
                if pm > pair_min {
                    return Err(format!("pair {} starts below pair {}", i + 1, i));
                }
            }
            if i == 0 && (p.is_two_sided() || pair_min != pair_max) {
                return Err("bottom pair is not a single low set".into());
            }
            prev_max = Some(pair_max);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Edge ids for the back-edges of the sample graph, with their low depths
    // (vertex k sits at depth k - 1 on the path 1-2-3-4, 6 at 4, 7 at 5).
    const E93: EdgeId = 0; // (9,6)
    const E97: EdgeId = 1; // (9,7)
    const E106: EdgeId = 2; // (10,6)
    const E107: EdgeId = 3; // (10,7)
    const E73: EdgeId = 4; // (7,3)
    const E63: EdgeId = 5; // (6,3)

    fn arena() -> EntryArena {
        EntryArena::new(vec![4, 5, 4, 5, 2, 2])
    }

    fn build(arena: &mut EntryArena, forest: &mut SignedForest, pairs: &[(&[EdgeId], &[EdgeId])]) -> ConstraintSystem {
        let mut cs = ConstraintSystem::default();
        for (s0, s1) in pairs {
            let mut p = StackPair::default();
            for &e in *s0 {
                let single = arena.single(e).pairs[0].s0;
                p.s0 = arena.concat(p.s0, single, forest);
            }
            for &e in *s1 {
                let single = arena.single(e).pairs[0].s0;
                p.s1 = arena.concat(p.s1, single, forest);
            }
            cs.pairs.push(p);
        }
        cs
    }

    #[test]
    fn merge_two_thick_children() {
        let mut ar = arena();
        let mut f = SignedForest::new(6);
        let mut c = Counters::default();
        let mut cs = build(&mut ar, &mut f, &[(&[E93], &[]), (&[E97], &[])]);
        let other = build(&mut ar, &mut f, &[(&[E106], &[]), (&[E107], &[])]);
        ar.merge_cs(&mut cs, other, 4, 4, &mut f, &mut c).unwrap();
        assert_eq!(
            ar.snapshot(&cs),
            vec![[vec![E93, E106], vec![]], [vec![E97], vec![E107]]]
        );
        assert_eq!(f.relation(E93, E106), Some(Relation::Same));
        assert_eq!(f.relation(E97, E107), Some(Relation::Opposite));
        assert_eq!(f.relation(E93, E97), None);
        ar.check(&cs).unwrap();

        ar.delete_low(&mut cs, 5, &mut c, |_| {});
        assert_eq!(ar.snapshot(&cs), vec![[vec![E93, E106], vec![]]]);
        assert_eq!(c.deletions, 2);
    }

    #[test]
    fn merge_higher_child_opens_a_new_pair() {
        let mut ar = arena();
        let mut f = SignedForest::new(6);
        let mut c = Counters::default();
        let mut cs = build(&mut ar, &mut f, &[(&[E73], &[])]);
        let other = build(&mut ar, &mut f, &[(&[E93, E106], &[])]);
        ar.merge_cs(&mut cs, other, 2, 4, &mut f, &mut c).unwrap();
        assert_eq!(
            ar.snapshot(&cs),
            vec![[vec![E73], vec![]], [vec![E93, E106], vec![]]]
        );
        assert_eq!(f.relation(E73, E93), None);
    }

    #[test]
    fn merge_equal_low_appends_to_the_low_set() {
        let mut ar = arena();
        let mut f = SignedForest::new(6);
        let mut c = Counters::default();
        let mut cs = build(&mut ar, &mut f, &[(&[E63], &[])]);
        let other = build(&mut ar, &mut f, &[(&[E73], &[])]);
        ar.merge_cs(&mut cs, other, 2, 2, &mut f, &mut c).unwrap();
        assert_eq!(ar.snapshot(&cs), vec![[vec![E63, E73], vec![]]]);
        assert_eq!(f.relation(E63, E73), Some(Relation::Same));
    }

    #[test]
    fn two_sided_pair_above_boundary_conflicts() {
        // Lows: 0 -> 1, 1 -> 3, 2 -> 3, 3 -> 2, 4 -> 1.
        let mut ar = EntryArena::new(vec![1, 3, 3, 2, 1]);
        let mut f = SignedForest::new(5);
        let mut c = Counters::default();
        let mut cs = build(&mut ar, &mut f, &[(&[0], &[]), (&[1], &[2])]);
        let other = build(&mut ar, &mut f, &[(&[3], &[])]);
        assert_eq!(
            ar.merge_cs(&mut cs, other, 1, 2, &mut f, &mut c),
            Err(Conflict::BoundaryPairBothSides)
        );
    }

    #[test]
    fn deleting_nothing_is_a_no_op() {
        let mut ar = arena();
        let mut f = SignedForest::new(6);
        let mut c = Counters::default();
        let mut cs = build(&mut ar, &mut f, &[(&[E93], &[]), (&[E97], &[])]);
        let before = cs.clone();
        ar.delete_low(&mut cs, 3, &mut c, |_| panic!("nothing to pop"));
        assert_eq!(cs, before);
    }

    #[test]
    fn deletion_walks_through_equal_pairs() {
        // Two unconstrained pairs returning to the same depth.
        let mut ar = EntryArena::new(vec![1, 3, 3]);
        let mut f = SignedForest::new(3);
        let mut c = Counters::default();
        let mut cs = build(&mut ar, &mut f, &[(&[0], &[]), (&[1], &[]), (&[2], &[])]);
        ar.check(&cs).unwrap();
        let mut popped = Vec::new();
        ar.delete_low(&mut cs, 3, &mut c, |e| popped.push(e));
        assert_eq!(popped, vec![2, 1]);
        assert_eq!(ar.snapshot(&cs), vec![[vec![0], vec![]]]);
    }
}
