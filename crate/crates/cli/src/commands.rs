use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use lrplanar::embed::{certify, trace_faces, RotationSystem};
use lrplanar::lrtest::{format_trace, test_planarity_traced};
use lrplanar::oracle::{generate, GenSpec};
use lrplanar::tremaux::run_dfs_forest;
use lrplanar::ttorder::tt_sort;
use lrplanar::{analyze, Graph, HalfEdge};
use serde_json::json;

use crate::input::{parse_edge_list, read_source, Input};

pub fn test(path: &str, json: bool, trace: bool) -> Result<String> {
    let input = Input::load(path)?;
    input.note_loops();
    let mut out = String::new();
    let planar = if trace {
        let tree = run_dfs_forest(&input.graph);
        let adj = tt_sort(&tree);
        let mut steps = Vec::new();
        let outcome = test_planarity_traced(&tree, &adj, |s| steps.push(s.clone()));
        out.push_str(&format_trace(&steps));
        if let Some((v, conflict)) = outcome.conflict_at {
            writeln!(out, "v={}: merge fails ({conflict:?})", v + 1)?;
        }
        outcome.is_planar()
    } else {
        analyze(&input.graph)?.is_planar()
    };
    if json {
        let v = json!({ "planar": planar, "loops_ignored": input.loops.len() });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "{}", if planar { "planar" } else { "nonplanar" })?;
    }
    Ok(out)
}

pub fn embed(path: &str, json: bool) -> Result<String> {
    let input = Input::load(path)?;
    input.note_loops();
    let an = analyze(&input.graph)?;
    let Some(rot) = &an.rotation else {
        return Ok(if json {
            format!("{}\n", json!({ "planar": false }))
        } else {
            "nonplanar\n".to_string()
        });
    };

    // Back to file numbering, each loop as two adjacent half-edges.
    let n = input.raw.n;
    let mut loops_at = vec![Vec::new(); n];
    for &l in &input.loops {
        loops_at[input.raw.ends[l].0].push(l);
    }
    let mut offsets = vec![0];
    let mut ring = Vec::with_capacity(2 * input.raw.ends.len());
    for (v, at_v) in loops_at.iter().enumerate() {
        ring.extend(
            rot.at(v)
                .iter()
                .map(|h| HalfEdge::new(input.file_edge[h.edge()], h.is_at_head())),
        );
        for &l in at_v {
            ring.extend([HalfEdge::new(l, false), HalfEdge::new(l, true)]);
        }
        offsets.push(ring.len());
    }
    let full = RotationSystem::from_parts(&input.raw, offsets, ring)?;
    let faces = trace_faces(&input.raw, &full).count();

    if json {
        let rotation: Vec<Vec<usize>> = (0..n)
            .map(|v| full.at(v).iter().map(|h| h.edge() + 1).collect())
            .collect();
        let lambda: serde_json::Map<String, serde_json::Value> = an
            .lambda
            .iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(e, &s)| ((input.file_edge[e] + 1).to_string(), json!(s)))
            .collect();
        let v = json!({ "planar": true, "rotation": rotation, "faces": faces, "lambda": lambda });
        Ok(format!("{v}\n"))
    } else {
        Ok(format!("{}faces: {faces}\n", full.to_text(&input.raw)))
    }
}

pub fn certify_files(graph_path: &str, rotation_path: &str, json: bool) -> Result<String> {
    let raw = parse_edge_list(&read_source(graph_path)?).with_context(|| format!("parsing {graph_path}"))?;
    let text = read_source(rotation_path)?;
    let rot = RotationSystem::parse(&raw, &text).with_context(|| format!("checking {rotation_path}"))?;
    let cert = certify(&raw, &rot);
    if json {
        let comps: Vec<_> = cert
            .components
            .iter()
            .map(|c| json!({ "vertices": c.vertices, "edges": c.edges, "faces": c.faces }))
            .collect();
        Ok(format!("{}\n", json!({ "genus0": cert.genus0, "components": comps })))
    } else {
        Ok(if cert.genus0 { "genus-0\n" } else { "not-genus-0\n" }.to_string())
    }
}

pub fn gen(spec: &GenSpec, label: &str) -> Result<String> {
    let g = generate(spec)?;
    let mut out = String::with_capacity(12 * g.edge_count() + 32);
    writeln!(out, "# {label}")?;
    write_edge_list(&mut out, &g)?;
    Ok(out)
}

fn write_edge_list(out: &mut String, g: &Graph) -> std::fmt::Result {
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn bench(sizes: &[usize], seed: u64, repeat: usize) -> Result<String> {
    if sizes.is_empty() {
        bail!("no sizes given");
    }
    if let Some(&n) = sizes.iter().find(|&&n| n < 3) {
        bail!("size {n} is too small for a triangulation (need at least 3)");
    }
    if repeat == 0 {
        bail!("--repeat must be at least 1");
    }
    let mut out = String::from("n\tm\tms\tedges_per_sec\n");
    for &n in sizes {
        let g = generate(&GenSpec::Triangulation { n, seed })?;
        let mut best = f64::INFINITY;
        for _ in 0..repeat {
            let start = Instant::now();
            let an = analyze(&g)?;
            let secs = start.elapsed().as_secs_f64();
            if an.rotation.is_none() {
                bail!("triangulation of size {n} was rejected");
            }
            best = best.min(secs);
        }
        let m = g.edge_count();
        let rate = if best > 0.0 { m as f64 / best } else { f64::INFINITY };
        writeln!(out, "{n}\t{m}\t{:.3}\t{:.0}", best * 1e3, rate)?;
    }
    Ok(out)
}
