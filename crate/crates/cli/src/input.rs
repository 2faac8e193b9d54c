//! Edge-list files.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 1 <= u, v <= n)
//! ```
//!
//! Edges are numbered from 1 in file order, and that order is the incidence
//! order. Loops are accepted in the file but kept out of the graph handed to
//! the library.

use anyhow::{bail, Context, Result};
use lrplanar::embed::EdgeList;
use lrplanar::{EdgeId, Graph};

pub struct Input {
    /// Everything in the file, loops included. Edge `i` is file edge `i + 1`.
    pub raw: EdgeList,
    /// The loopless part.
    pub graph: Graph,
    /// File edge of each graph edge.
    pub file_edge: Vec<EdgeId>,
    /// File edges that are loops.
    pub loops: Vec<EdgeId>,
}

pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (no, header) = lines.next().context("missing 'n m' header")?;
    let (n, m) = two_numbers(header).with_context(|| format!("line {no}: bad header"))?;
    if n == 0 {
        bail!("line {no}: a graph needs at least one vertex");
    }
    let mut ends = Vec::with_capacity(m);
    for (no, line) in lines {
        if ends.len() == m {
            bail!("line {no}: more than the {m} edges announced in the header");
        }
        let (u, v) = two_numbers(line).with_context(|| format!("line {no}: bad edge"))?;
        for w in [u, v] {
            if w == 0 || w > n {
                bail!("line {no}: vertex {w} is outside 1..={n}");
            }
        }
        ends.push((u - 1, v - 1));
    }
    if ends.len() < m {
        bail!("the header announces {m} edges but the file has {}", ends.len());
    }
    Ok(EdgeList { n, ends })
}

fn two_numbers(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().context("expected two numbers")?;
        tok.parse().with_context(|| format!("{tok:?} is not a number"))
    };
    let pair = (next()?, next()?);
    if let Some(extra) = it.next() {
        bail!("unexpected {extra:?} after two numbers");
    }
    Ok(pair)
}

impl Input {
    pub fn load(path: &str) -> Result<Self> {
        let raw = parse_edge_list(&read_source(path)?).with_context(|| format!("parsing {path}"))?;
        Self::from_raw(raw)
    }

    pub fn from_raw(raw: EdgeList) -> Result<Self> {
        let mut loops = Vec::new();
        let mut file_edge = Vec::with_capacity(raw.ends.len());
        let mut ends = Vec::with_capacity(raw.ends.len());
        for (i, &(u, v)) in raw.ends.iter().enumerate() {
            if u == v {
                loops.push(i);
            } else {
                file_edge.push(i);
                ends.push((u, v));
            }
        }
        let graph = Graph::new(raw.n, &ends)?;
        Ok(Input {
            raw,
            graph,
            file_edge,
            loops,
        })
    }

    /// Reports stripped loops on stderr.
    pub fn note_loops(&self) {
        match self.loops.len() {
            0 => {}
            1 => eprintln!("1 loop ignored"),
            k => eprintln!("{k} loops ignored"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_loops() {
        let raw = parse_edge_list("# triangle with a loop\n3 4\n1 2\n\n2 3\n# mid\n3 1\n1 1\n").unwrap();
        assert_eq!(raw.n, 3);
        assert_eq!(raw.ends, vec![(0, 1), (1, 2), (2, 0), (0, 0)]);
        let input = Input::from_raw(raw).unwrap();
        assert_eq!(input.loops, vec![3]);
        assert_eq!(input.file_edge, vec![0, 1, 2]);
        assert_eq!(input.graph.edge_count(), 3);
    }

    #[test]
    fn rejects_malformed_files() {
        for text in [
            "",
            "# only comments\n",
            "3\n",
            "0 0\n",
            "3 2\n1 2\n",
            "3 1\n1 2\n2 3\n",
            "3 1\n1 4\n",
            "3 1\n1 x\n",
            "3 1\n1 2 3\n",
        ] {
            assert!(parse_edge_list(text).is_err(), "{text:?}");
        }
    }
}
