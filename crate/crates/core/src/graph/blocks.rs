use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Blocks of a connected graph, ordered so that every later block meets the
/// union of the earlier ones in exactly one vertex, its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex lists. A block is a maximal 2-connected subgraph, a
    /// bridge, or a lone vertex when the graph is `K_1`.
    pub blocks: Vec<Vec<usize>>,
    /// Vertices lying in two or more blocks, sorted.
    pub cut_vertices: Vec<usize>,
    /// `representatives[i]` is `u_i` for `i >= 1`; `None` for the first block.
    pub representatives: Vec<Option<usize>>,
}

impl BlockDecomposition {
    /// Reorders the same blocks with `blocks[root]` first.
    pub fn rooted_at(&self, root: usize) -> Result<BlockDecomposition> {
        if root >= self.blocks.len() {
            return Err(Error::NoSuchBlock {
                index: root,
                count: self.blocks.len(),
            });
        }
        Ok(order_blocks(self.blocks.clone(), root))
    }

    /// Orders of the blocks, sorted non-increasing.
    pub fn block_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Blocks of an arbitrary graph (isolated vertices give singleton blocks),
/// each a sorted vertex list. Iterative Hopcroft–Tarjan.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let mut disc = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut out = Vec::new();
    let mut vstack: Vec<usize> = Vec::new();
    // (vertex, next neighbor index, parent)
    let mut calls: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSET {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if adj[root].is_empty() {
            out.push(vec![root]);
            continue;
        }
        vstack.push(root);
        calls.push((root, 0, UNSET));
        while let Some(frame) = calls.last_mut() {
            let v = frame.0;
            if frame.1 < adj[v].len() {
                let w = adj[v][frame.1];
                frame.1 += 1;
                let parent = frame.2;
                if disc[w] == UNSET {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    vstack.push(w);
                    calls.push((w, 0, v));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                calls.pop();
                if let Some(&(p, _, _)) = calls.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut comp = vec![p];
                        while let Some(x) = vstack.pop() {
                            comp.push(x);
                            if x == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        out.push(comp);
                    }
                }
            }
        }
        vstack.clear();
    }
    out.sort();
    out
}

/// Orders `blocks` starting from `blocks[root]`; each next block is the one
/// touching the covered vertices with the smallest representative, ties by
/// vertex list.
pub(crate) fn order_blocks(mut blocks: Vec<Vec<usize>>, root: usize) -> BlockDecomposition {
    let n = blocks.iter().flatten().max().map_or(0, |&m| m + 1);
    let first = blocks.swap_remove(root);
    blocks.sort();
    let mut covered = VertexSet::empty(n);
    first.iter().for_each(|&v| covered.insert(v));
    let mut ordered = vec![first];
    let mut reps = vec![None];
    while !blocks.is_empty() {
        let (idx, rep) = blocks
            .iter()
            .enumerate()
            .filter_map(|(i, b)| {
                let shared: Vec<usize> = b.iter().copied().filter(|&v| covered.contains(v)).collect();
                (shared.len() == 1).then(|| (i, shared[0]))
            })
            .min_by(|a, b| (a.1, &blocks[a.0]).cmp(&(b.1, &blocks[b.0])))
            .expect("blocks of a connected graph form a tree");
        let b = blocks.remove(idx);
        b.iter().for_each(|&v| covered.insert(v));
        ordered.push(b);
        reps.push(Some(rep));
    }
    let mut count = vec![0usize; n];
    ordered.iter().flatten().for_each(|&v| count[v] += 1);
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
    BlockDecomposition {
        blocks: ordered,
        cut_vertices,
        representatives: reps,
    }
}

/// Block decomposition of a connected graph. The first block is the
/// lexicographically smallest vertex list; see [`BlockDecomposition`].
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let blocks = biconnected_components(g);
    if blocks.is_empty() {
        return Ok(BlockDecomposition {
            blocks: vec![],
            cut_vertices: vec![],
            representatives: vec![],
        });
    }
    // `biconnected_components` returns them sorted, so index 0 is smallest.
    Ok(order_blocks(blocks, 0))
}
