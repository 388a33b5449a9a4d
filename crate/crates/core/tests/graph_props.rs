use proptest::prelude::*;
use turan_core::graph::{
    block_decomposition, circumference, count_cliques, has_cycle_geq, max_matching, maximum_matching,
    star_transform, CycleSearch,
};
use turan_core::Graph;

/// Random graph on `lo..=hi` vertices from a bit per pair.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

/// Random connected graph: a random tree plus sparse extra edges.
fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(0u8..5, n * n.saturating_sub(1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let mut g = Graph::new(n);
                for (i, p) in parents.iter().enumerate() {
                    g.add_edge(i + 1, p.index(i + 1));
                }
                let mut it = extra.into_iter();
                for v in 1..n {
                    for u in 0..v {
                        if it.next().unwrap() == 0 {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
    })
}

fn brute_matching(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: u32) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = go(rest, used);
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    skip.max(1 + go(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    go(&g.edges(), 0)
}

/// Cliques by size, from every vertex subset.
fn brute_clique_sizes(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v))) {
            counts[vs.len()] += 1;
        }
    }
    counts
}

/// Longest cycle by extending every simple path from its least vertex.
fn brute_circumference(g: &Graph) -> usize {
    fn extend(g: &Graph, start: usize, at: usize, len: usize, used: u32, best: &mut usize) {
        for w in g.neighbors(at).iter() {
            if w == start && len >= 3 {
                *best = (*best).max(len);
            }
            if w > start && used >> w & 1 == 0 {
                extend(g, start, w, len + 1, used | 1 << w, best);
            }
        }
    }
    let mut best = 0;
    for s in 0..g.order() {
        extend(g, s, s, 1, 1 << s, &mut best);
    }
    best
}

fn sorted_block_orders(g: &Graph) -> Vec<usize> {
    let mut orders = block_decomposition(g).unwrap().block_orders();
    orders.sort_unstable();
    orders
}

/// St built by literally rerouting one block at a time, each step on the
/// previous graph.
fn star_by_steps(g: &Graph, b1: usize, u1: usize) -> Graph {
    let d = block_decomposition(g).unwrap().rooted_at(b1).unwrap();
    let mut h = g.clone();
    for (block, rep) in d.blocks.iter().zip(&d.representatives).skip(1) {
        let ui = rep.unwrap();
        let moved: Vec<usize> = block.iter().copied().filter(|&v| v != ui && h.has_edge(v, ui)).collect();
        for v in moved {
            h.remove_edge(v, ui);
            h.add_edge(v, u1);
        }
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matching_matches_exhaustive(g in graph(0, 12)) {
        let m = maximum_matching(&g);
        prop_assert_eq!(m.len(), brute_matching(&g));
        prop_assert_eq!(max_matching(&g), m.len());
        let mut seen = vec![false; g.order()];
        for (u, v) in m {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn clique_counts_agree_across_r(g in graph(0, 10)) {
        let brute = brute_clique_sizes(&g);
        prop_assert_eq!(count_cliques(&g, 1), g.order() as u64);
        prop_assert_eq!(count_cliques(&g, 2), g.size() as u64);
        for (r, &c) in brute.iter().enumerate().skip(1) {
            prop_assert_eq!(count_cliques(&g, r), c);
        }
        prop_assert_eq!(count_cliques(&g, g.order() + 1), 0);
    }

    #[test]
    fn cycle_queries_agree(g in graph(0, 9)) {
        let c = brute_circumference(&g);
        prop_assert_eq!(circumference(&g, None), CycleSearch::Exact(c));
        for k in 3..=10 {
            prop_assert_eq!(has_cycle_geq(&g, k), c >= k);
        }
    }

    #[test]
    fn star_transform_invariants(g in connected_graph(1, 10)) {
        let d = block_decomposition(&g).unwrap();
        for (b, block) in d.blocks.iter().enumerate() {
            let u1 = block[block.len() / 2];
            let st = star_transform(&g, b, u1).unwrap();
            prop_assert_eq!(&st, &star_by_steps(&g, b, u1));
            prop_assert!(st.is_connected());
            for r in 1..=5 {
                prop_assert_eq!(count_cliques(&st, r), count_cliques(&g, r));
            }
            prop_assert_eq!(sorted_block_orders(&st), sorted_block_orders(&g));
            let sd = block_decomposition(&st).unwrap();
            prop_assert!(sd.blocks.iter().all(|blk| blk.contains(&u1)));
        }
    }
}

#[test]
fn star_of_path_is_star() {
    let p4 = Graph::path(4);
    let d = block_decomposition(&p4).unwrap();
    let b = d.blocks.iter().position(|blk| blk == &vec![0, 1]).unwrap();
    assert_eq!(star_transform(&p4, b, 0).unwrap(), Graph::star(4));
}

#[test]
fn two_connected_graph_is_fixed() {
    let g = Graph::cycle(6);
    assert_eq!(star_transform(&g, 0, 3).unwrap(), g);
}
