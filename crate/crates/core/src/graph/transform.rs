use super::blocks::block_decomposition;
use super::Graph;
use crate::error::{Error, Result};

/// The star graph `St(G, B_1, u_1)`: every block after `B_1` has its edges at
/// its representative `u_i` moved to `u_1`, so all blocks end up sharing `u_1`.
///
/// `b1_index` indexes `block_decomposition(g).blocks`.
pub fn star_transform(g: &Graph, b1_index: usize, u1: usize) -> Result<Graph> {
    let decomposition = block_decomposition(g)?.rooted_at(b1_index)?;
    if !decomposition.blocks[0].contains(&u1) {
        return Err(Error::NotInBlock {
            vertex: u1,
            block: b1_index,
        });
    }
    let mut out = g.clone();
    for (block, rep) in decomposition
        .blocks
        .iter()
        .zip(&decomposition.representatives)
        .skip(1)
    {
        let rep = rep.expect("later blocks have representatives");
        if rep == u1 {
            continue;
        }
        for &v in block {
            if v != rep && g.has_edge(v, rep) {
                out.remove_edge(v, rep);
                out.add_edge(v, u1);
            }
        }
    }
    Ok(out)
}

/// `G[v -> A]`: drop every edge at `v`, then join `v` to each vertex of `targets`.
pub fn switch_vertex(g: &Graph, v: usize, targets: &[usize]) -> Result<Graph> {
    g.check_vertex(v)?;
    for &a in targets {
        g.check_vertex(a)?;
        if a == v {
            return Err(Error::VertexInTargetSet(v));
        }
    }
    let mut out = g.clone();
    for u in g.neighbors(v).iter() {
        out.remove_edge(v, u);
    }
    for &a in targets {
        out.add_edge(v, a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::count_cliques;

    #[test]
    fn two_connected_graph_unchanged() {
        let g = Graph::complete(5);
        assert_eq!(star_transform(&g, 0, 3).unwrap(), g);
    }

    #[test]
    fn path_becomes_star() {
        // a-b-c-d with B1 = {a, b}, u1 = a.
        let st = star_transform(&Graph::path(4), 0, 0).unwrap();
        assert_eq!(st, Graph::star(4));
    }

    #[test]
    fn hub_outside_first_block_rejected() {
        assert!(matches!(
            star_transform(&Graph::path(4), 0, 2),
            Err(Error::NotInBlock { vertex: 2, block: 0 })
        ));
        assert_eq!(
            star_transform(&Graph::new(3), 0, 0),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn preserves_counts_on_a_mixed_graph() {
        let g = Graph::from_edges(
            9,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6), (6, 7), (7, 8), (6, 8), (5, 7)],
        )
        .unwrap();
        let blocks = block_decomposition(&g).unwrap().blocks;
        for (i, b) in blocks.iter().enumerate() {
            for &u in b {
                let st = star_transform(&g, i, u).unwrap();
                for r in 2..=4 {
                    assert_eq!(count_cliques(&st, r), count_cliques(&g, r));
                }
            }
        }
    }

    #[test]
    fn switch_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(switch_vertex(&g, 3, &[]).unwrap(), g);
        assert_eq!(switch_vertex(&g, 3, &[0, 1, 2]).unwrap(), Graph::complete(4));
        let h = switch_vertex(&g, 0, &[3]).unwrap();
        assert_eq!(h.degree(0), 1);
        assert_eq!(h.edges(), vec![(0, 3), (1, 2)]);
        assert_eq!(
            switch_vertex(&g, 0, &[0, 1]),
            Err(Error::VertexInTargetSet(0))
        );
    }
}
