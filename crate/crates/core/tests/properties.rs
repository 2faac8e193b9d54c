use lrplanar::embed::{build_rotation, certify, lambda_hat, trace_faces};
use lrplanar::lrtest::{test_planarity_with, LrOptions, Relation};
use lrplanar::oracle::{brute_planar, check_strong_fcoloring, generate, rotation_count, subdivide, GenSpec, ROTATION_LIMIT};
use lrplanar::tremaux::{run_dfs, run_dfs_forest, EdgeClass, TremauxData};
use lrplanar::ttorder::{steered_dfs, tt_sort, Visit};
use lrplanar::{analyze, Graph};
use proptest::prelude::*;

/// Connected multigraph: a random tree plus random extra edges, parallel
/// edges allowed.
fn connected_multigraph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..=max_extra);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut es: Vec<_> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            es.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::new(n, &es).unwrap()
        })
    })
}

fn simple_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), any::<prop::sample::Index>()).prop_map(|(n, seed, idx)| {
        let max = n * (n - 1) / 2;
        let m = n - 1 + idx.index(max - (n - 1) + 1);
        generate(&GenSpec::RandomConnected { n, m, seed }).unwrap()
    })
}

fn depths(t: &TremauxData) -> Vec<u32> {
    (0..t.vertex_count()).map(|v| t.depth(v)).collect()
}

/// Back-edges whose tail lies in the subtree of `y`.
fn back_edges_under(t: &TremauxData, y: usize) -> Vec<usize> {
    t.back_edges().filter(|&f| t.is_ancestor(y, t.orient(f).0)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 300,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn tremaux_structure(g in connected_multigraph(12, 25)) {
        let t = run_dfs(&g, 0).unwrap();
        let d = depths(&t);
        for f in t.back_edges() {
            let (x, y) = t.orient(f);
            prop_assert!(d[y] < d[x]);
            prop_assert!(t.is_ancestor(y, x));
            prop_assert_eq!(t.low(f), y);
            // Anchor: the tree edge out of y on the path to x.
            let a = t.init_anchor(f).unwrap();
            prop_assert_eq!(t.orient(a).0, y);
            prop_assert!(t.is_ancestor(t.orient(a).1, x));
        }
        for e in (0..g.edge_count()).filter(|&e| t.is_tree(e)) {
            let (x, y) = t.orient(e);
            let under = back_edges_under(&t, y);
            let low = under.iter().map(|&f| d[t.orient(f).1]).chain([d[x]]).min().unwrap();
            prop_assert_eq!(t.low_depth(e), low);
            let low2 = under.iter().map(|&f| d[t.orient(f).1]).filter(|&h| h > low).min();
            prop_assert_eq!(t.low2(e).map(|v| d[v]), low2);
            let vlow = under.iter().map(|&f| d[t.orient(f).1]).chain([d[y]]).min().unwrap();
            let thick = under.iter().any(|&f| {
                let h = d[t.orient(f).1];
                vlow < h && h < d[x]
            });
            let class = t.edge_class(e).unwrap();
            prop_assert_eq!(class == EdgeClass::Thick, thick);
            prop_assert_eq!(class == EdgeClass::Block, low == d[x]);
        }
    }

    #[test]
    fn sorted_adjacency_is_a_stable_key_order(g in connected_multigraph(12, 25)) {
        let t = run_dfs(&g, 0).unwrap();
        let adj = tt_sort(&t);
        for v in 0..g.vertex_count() {
            let mut expected = t.out(v).to_vec();
            expected.sort_by_key(|&e| adj.key(e));
            prop_assert_eq!(adj.out(v), &expected[..]);
            for w in adj.out(v).windows(2) {
                let (a, b) = (w[0], w[1]);
                if t.low_depth(a) == t.low_depth(b) && t.edge_class(a) == Some(EdgeClass::Thick) {
                    prop_assert_eq!(t.edge_class(b), Some(EdgeClass::Thick));
                }
            }
        }
    }

    #[test]
    fn processing_order_is_bottom_up(g in connected_multigraph(12, 25)) {
        let t = run_dfs(&g, 0).unwrap();
        let adj = tt_sort(&t);
        let mut left = vec![false; g.vertex_count()];
        let mut backs = 0;
        steered_dfs(&t, &adj, |ev| match ev {
            Visit::Leave(v) => {
                for &e in t.out(v) {
                    if t.is_tree(e) {
                        assert!(left[t.orient(e).1]);
                    }
                }
                left[v] = true;
            }
            Visit::BackEdge(_) => backs += 1,
            Visit::Enter(_) => {}
        });
        prop_assert!(left.iter().all(|&l| l));
        prop_assert_eq!(backs, t.back_edges().count());
    }

    #[test]
    fn verdict_matches_brute_force(g in connected_multigraph(7, 14)) {
        prop_assume!(rotation_count(&g) <= ROTATION_LIMIT);
        let t = run_dfs(&g, 0).unwrap();
        let adj = tt_sort(&t);
        let o = test_planarity_with(&t, &adj, LrOptions { check_invariants: true });
        prop_assert_eq!(o.is_planar(), brute_planar(&g).unwrap());
        let backs = t.back_edges().count();
        prop_assert!(o.counters.pairs_created <= backs);
        prop_assert!(o.counters.pairs_fused <= o.counters.pairs_created);
        prop_assert!(o.counters.deletions <= backs);
    }

    #[test]
    fn planar_outcome_is_a_valid_embedding(g in connected_multigraph(14, 30)) {
        let t = run_dfs(&g, 0).unwrap();
        let adj = tt_sort(&t);
        let o = test_planarity_with(&t, &adj, LrOptions { check_invariants: true });
        prop_assume!(o.is_planar());
        for e in 0..g.edge_count() {
            let expected: &[i8] = if t.is_tree(e) { &[0] } else { &[-1, 1] };
            prop_assert!(expected.contains(&o.lambda[e]));
        }
        for &(a, b, rel) in o.forest.links().to_vec().iter() {
            prop_assert_eq!(o.lambda[a] == o.lambda[b], rel == Relation::Same);
        }
        prop_assert!(check_strong_fcoloring(&g, &t, &o.lambda));

        let rot = build_rotation(&g, &t, &adj, &o).unwrap();
        let cert = certify(&g, &rot);
        prop_assert!(cert.genus0, "{:?}", cert);
        let faces = trace_faces(&g, &rot);
        prop_assert_eq!(faces.faces().map(|f| f.len()).sum::<usize>(), 2 * g.edge_count());

        // Layout around every vertex.
        let hat = lambda_hat(&t, &o);
        for v in 0..g.vertex_count() {
            let ring: Vec<usize> = rot.at(v).iter().map(|h| h.edge()).collect();
            let mut rest = &ring[..];
            if let Some(p) = t.parent_edge(v) {
                prop_assert_eq!(ring[0], p);
                rest = &ring[1..];
            }
            let outs: Vec<usize> = rest.iter().copied().filter(|&e| t.orient(e).0 == v).collect();
            let sides: Vec<i8> = outs.iter().map(|&e| hat[e]).collect();
            let split = sides.iter().take_while(|&&s| s == -1).count();
            prop_assert!(sides[split..].iter().all(|&s| s == 1));
            prop_assert!(outs[..split].windows(2).all(|w| adj.key(w[0]) >= adj.key(w[1])));
            prop_assert!(outs[split..].windows(2).all(|w| adj.key(w[0]) <= adj.key(w[1])));
            // Every incoming back-edge sits next to its anchor, with only
            // back-edges of the same anchor and side in between.
            for (i, &f) in rest.iter().enumerate() {
                if t.is_tree(f) || t.orient(f).1 != v {
                    continue;
                }
                let anchor = t.init_anchor(f).unwrap();
                let j = rest.iter().position(|&e| e == anchor).unwrap();
                let (lo, hi, side) = if i < j { (i, j, -1) } else { (j + 1, i + 1, 1) };
                prop_assert_eq!(o.lambda[f], side);
                for &h in &rest[lo..hi] {
                    if h != anchor {
                        prop_assert_eq!(t.init_anchor(h), Some(anchor));
                        prop_assert_eq!(o.lambda[h], side);
                    }
                }
            }
        }
    }

    #[test]
    fn disconnected_graphs_need_every_component_planar(
        a in simple_connected(7),
        b in simple_connected(7),
    ) {
        let shift = a.vertex_count();
        let mut es = a.edges().to_vec();
        es.extend(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
        let g = Graph::new(shift + b.vertex_count(), &es).unwrap();
        let both = analyze(&a).unwrap().is_planar() && analyze(&b).unwrap().is_planar();
        let an = analyze(&g).unwrap();
        prop_assert_eq!(an.is_planar(), both);
        let forest = run_dfs_forest(&g);
        prop_assert_eq!(forest.roots(), &[0, shift]);
        if let Some(cert) = an.certify(&g) {
            prop_assert!(cert.genus0);
            prop_assert_eq!(cert.components.len(), 2);
        }
    }

    #[test]
    fn subdivision_preserves_brute_force_verdict(g in simple_connected(6), k in 1usize..3) {
        prop_assume!(rotation_count(&g) <= ROTATION_LIMIT / 10);
        let s = subdivide(&g, k);
        prop_assert_eq!(s.edge_count(), g.edge_count() * (k + 1));
        prop_assert_eq!(brute_planar(&s).unwrap(), brute_planar(&g).unwrap());
    }

    #[test]
    fn brute_force_respects_the_edge_bound(g in simple_connected(7)) {
        prop_assume!(rotation_count(&g) <= ROTATION_LIMIT);
        let (n, m) = (g.vertex_count(), g.edge_count());
        if n >= 3 && m > 3 * n - 6 {
            prop_assert!(!brute_planar(&g).unwrap());
        }
    }

    #[test]
    fn triangulations_embed_with_triangles_only(n in 3usize..80, seed in any::<u64>()) {
        let g = generate(&GenSpec::Triangulation { n, seed }).unwrap();
        prop_assert!(g.is_simple() && g.is_connected());
        prop_assert_eq!(g.edge_count(), 3 * n - 6);
        let an = analyze(&g).unwrap();
        prop_assert!(an.is_planar());
        let faces = trace_faces(&g, an.rotation.as_ref().unwrap());
        prop_assert_eq!(faces.count(), 2 * n - 4);
        prop_assert!(faces.faces().all(|f| f.len() == 3));
    }
}

#[test]
fn generators_are_deterministic() {
    for spec in [
        GenSpec::Triangulation { n: 500, seed: 4 },
        GenSpec::RandomConnected { n: 40, m: 90, seed: 4 },
    ] {
        assert_eq!(generate(&spec).unwrap().edges(), generate(&spec).unwrap().edges());
    }
    let a = generate(&GenSpec::Triangulation { n: 500, seed: 4 }).unwrap();
    let b = generate(&GenSpec::Triangulation { n: 500, seed: 5 }).unwrap();
    assert_ne!(a.edges(), b.edges());
}
