//! Step-by-step dump of the constraint systems, one row per finished vertex.
//!
//! Rows follow the usual hand-trace layout: pairs from bottom to top, each
//! pair shown as `[s0 | s1]` with the top of each stack first, and a second
//! row marked `(deletion)` whenever removing the returns to the parent vertex
//! changed the system.

use std::fmt::Write;

use super::constraint::{ConstraintSystem, EntryArena};
use crate::tremaux::TremauxData;

/// Back-edges as 1-based `(source, target)` pairs, per pair `[s0, s1]`, pairs
/// bottom first and each stack bottom first.
pub type Snapshot = Vec<[Vec<(usize, usize)>; 2]>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Finished vertex, 1-based.
    pub vertex: usize,
    /// Entering tree edge, 1-based.
    pub edge: (usize, usize),
    /// System after all merges, before deletion.
    pub merged: Snapshot,
    /// System after deletion, when deletion removed anything.
    pub after_deletion: Option<Snapshot>,
}

pub(super) fn snapshot(t: &TremauxData, arena: &EntryArena, cs: &ConstraintSystem) -> Snapshot {
    let label = |e| {
        let (x, y) = t.orient(e);
        (x + 1, y + 1)
    };
    arena
        .snapshot(cs)
        .into_iter()
        .map(|[s0, s1]| {
            [
                s0.into_iter().map(label).collect(),
                s1.into_iter().map(label).collect(),
            ]
        })
        .collect()
}

fn write_snapshot(out: &mut String, s: &Snapshot) {
    if s.is_empty() {
        out.push('∅');
        return;
    }
    for (i, pair) in s.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push('[');
        for (side, stack) in pair.iter().enumerate() {
            if side == 1 {
                out.push_str(" | ");
            }
            if stack.is_empty() {
                out.push('∅');
            }
            for (k, (x, y)) in stack.iter().rev().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "({x},{y})");
            }
        }
        out.push(']');
    }
}

/// Renders trace rows, e.g.
///
/// ```text
/// v=8: CS((7,8)) = [(10,6) (9,6) | ∅], [(9,7) | (10,7)]
///      -> [(10,6) (9,6) | ∅]  (deletion)
/// ```
pub fn format_trace(steps: &[TraceStep]) -> String {
    let mut out = String::new();
    for step in steps {
        let head = format!("v={}: ", step.vertex);
        let _ = write!(out, "{head}CS(({},{})) = ", step.edge.0, step.edge.1);
        write_snapshot(&mut out, &step.merged);
        out.push('\n');
        if let Some(after) = &step.after_deletion {
            out.push_str(&" ".repeat(head.chars().count()));
            out.push_str("-> ");
            write_snapshot(&mut out, after);
            out.push_str("  (deletion)\n");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_layout() {
        let step = TraceStep {
            vertex: 8,
            edge: (7, 8),
            merged: vec![
                [vec![(9, 6), (10, 6)], vec![]],
                [vec![(9, 7)], vec![(10, 7)]],
            ],
            after_deletion: Some(vec![[vec![(9, 6), (10, 6)], vec![]]]),
        };
        assert_eq!(
            format_trace(&[step]),
            "v=8: CS((7,8)) = [(10,6) (9,6) | ∅], [(9,7) | (10,7)]\n     -> [(10,6) (9,6) | ∅]  (deletion)\n"
        );
        let empty = TraceStep {
            vertex: 2,
            edge: (1, 2),
            merged: vec![[vec![(5, 1)], vec![]]],
            after_deletion: Some(vec![]),
        };
        assert_eq!(
            format_trace(&[empty]),
            "v=2: CS((1,2)) = [(5,1) | ∅]\n     -> ∅  (deletion)\n"
        );
    }
}
