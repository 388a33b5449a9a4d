use super::{Graph, VertexSet};

/// `N_r(G)`: the number of `r`-vertex subsets inducing a complete graph.
///
/// `N_0 = 1`, `N_1 = n`, `N_2 = e(G)`, and `N_r = 0` for `r > n`.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    match r {
        0 => 1,
        1 => g.order() as u64,
        2 => g.size() as u64,
        _ => {
            let n = g.order();
            let mut total = 0;
            for v in 0..n {
                // Extend only upward so each clique is counted from its least vertex.
                let mut cand = g.neighbors(v).clone();
                for u in 0..=v {
                    cand.remove(u);
                }
                total += extend(g, &cand, r - 1);
            }
            total
        }
    }
}

fn extend(g: &Graph, cand: &VertexSet, need: usize) -> u64 {
    if need == 1 {
        return cand.len() as u64;
    }
    if cand.len() < need {
        return 0;
    }
    let mut total = 0;
    let mut rest = cand.clone();
    for v in cand.iter() {
        rest.remove(v);
        if rest.len() + 1 < need {
            break;
        }
        let next = rest.intersection(g.neighbors(v));
        total += extend(g, &next, need - 1);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph, r: usize) -> u64 {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == r)
            .filter(|&m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                vs.iter()
                    .enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            })
            .count() as u64
    }

    #[test]
    fn complete_graph_counts() {
        assert_eq!(count_cliques(&Graph::complete(4), 2), 6);
        assert_eq!(count_cliques(&Graph::complete(6), 3), 20);
        assert_eq!(count_cliques(&Graph::complete(6), 6), 1);
        assert_eq!(count_cliques(&Graph::complete(6), 7), 0);
        assert_eq!(count_cliques(&Graph::complete(5), 1), 5);
    }

    #[test]
    fn matches_subset_enumeration() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 3), (3, 4), (4, 5), (5, 6), (4, 6), (2, 5)],
        )
        .unwrap();
        for r in 1..=7 {
            assert_eq!(count_cliques(&g, r), brute(&g, r), "r = {r}");
        }
    }
}
