//! Canonical forms for small graphs.
//!
//! Vertices are first split by colour refinement (degree, then the multiset
//! of neighbour colours, to a fixed point). Refinement is invariant under
//! isomorphism, so taking the lexicographically smallest adjacency code over
//! the orderings that respect the refined cells still gives a complete
//! invariant, while skipping most of the `n!` labelings.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order whose adjacency code fits in a `u64`.
pub const CANON_MAX_ORDER: usize = 11;

/// Adjacency code in graph6 bit order (`(0,1), (0,2), (1,2), (0,3), ...`),
/// first pair in the most significant position.
#[cfg(test)]
fn code_of(adj: &[u32], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | u64::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

/// Rebuilds a graph from its code.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::new(n);
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| distinct.binary_search(&s).expect("signature present"))
            .collect();
        let before = {
            let mut c = colour.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        colour = next;
        if distinct.len() == before {
            return colour;
        }
    }
}

struct Best {
    code: u64,
    order: Vec<usize>,
}

/// Branch and bound over cell-respecting orderings; a partial ordering is
/// dropped once its code prefix exceeds the best one found.
#[allow(clippy::too_many_arguments)]
fn search(
    adj: &[u32],
    cells: &[Vec<usize>],
    cell_of_pos: &[usize],
    order: &mut Vec<usize>,
    used: u32,
    prefix: u64,
    total_bits: usize,
    best: &mut Option<Best>,
) {
    let pos = order.len();
    if pos == adj.len() {
        if best.as_ref().is_none_or(|b| prefix < b.code) {
            *best = Some(Best {
                code: prefix,
                order: order.clone(),
            });
        }
        return;
    }
    for &w in &cells[cell_of_pos[pos]] {
        if used >> w & 1 == 1 {
            continue;
        }
        let mut p = prefix;
        for &u in order.iter() {
            p = p << 1 | u64::from(adj[u] >> w & 1);
        }
        let bits = (pos + 1) * pos / 2;
        if let Some(b) = best {
            let best_prefix = b.code >> (total_bits - bits);
            if p > best_prefix {
                continue;
            }
        }
        order.push(w);
        search(adj, cells, cell_of_pos, order, used | 1 << w, p, total_bits, best);
        order.pop();
    }
}

/// Canonical code and the ordering that realizes it (`order[i]` is the old
/// vertex placed at position `i`).
pub(crate) fn canonical_adj(adj: &[u32]) -> (u64, Vec<usize>) {
    let n = adj.len();
    let colour = refine(adj);
    let ncolours = colour.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![Vec::new(); ncolours];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    let cell_of_pos: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
        .collect();
    let mut best = None;
    let total_bits = n * n.saturating_sub(1) / 2;
    search(adj, &cells, &cell_of_pos, &mut Vec::with_capacity(n), 0, 0, total_bits, &mut best);
    let best = best.expect("at least one ordering");
    (best.code, best.order)
}

pub(crate) fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, w| acc | 1 << w))
        .collect()
}

/// The canonical code of `g`; equal codes iff isomorphic graphs of equal order.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "canonical form order",
            size: g.order(),
            limit: CANON_MAX_ORDER,
        });
    }
    Ok(canonical_adj(&adjacency(g)).0)
}

/// The canonical relabeling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.order(), canonical_code(g)?))
}
