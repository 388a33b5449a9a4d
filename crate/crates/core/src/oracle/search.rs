//! Branch and bound over labeled graphs on at most eight vertices.
//!
//! Edges are decided in lexicographic order. An edge is only included if the
//! graph stays family-free, so every leaf is family-free. An edge skipped
//! while still addable must have become blocked by the leaf, which restricts
//! leaves to edge-maximal graphs. Both constraints are monotone under adding
//! edges, and `N_r` is too, so a maximum is always attained at such a leaf.
//!
//! The bound at a node is `N_r` of the current graph plus every undecided
//! edge. Pruning is strict (`bound < best`), so all maximizers are reached.

use std::collections::BTreeSet;

use super::canon::canonical_adj;
use crate::graph::ForbiddenFamily;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Constraints {
    pub cycle: Option<usize>,
    pub matching: Option<usize>,
    pub r: usize,
}

impl From<&ForbiddenFamily> for Constraints {
    fn from(f: &ForbiddenFamily) -> Self {
        Constraints {
            cycle: f.cycle_min_len,
            matching: f.matching_bound,
            r: f.clique_order,
        }
    }
}

pub(crate) fn count_cliques(adj: &[u32], cand: u32, r: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    let mut total = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if r == 1 {
            total += 1;
        } else {
            total += count_cliques(adj, adj[v] & rest, r - 1);
        }
    }
    total
}

/// `ν` of the subgraph induced by `mask`.
fn matching_in(adj: &[u32], mask: u32) -> usize {
    if mask.count_ones() < 2 {
        return 0;
    }
    let x = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << x);
    let mut best = matching_in(adj, rest);
    let mut nb = adj[x] & rest;
    while nb != 0 {
        let y = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        best = best.max(1 + matching_in(adj, rest & !(1 << y)));
        if 2 * best >= mask.count_ones() as usize {
            break;
        }
    }
    best
}

/// Whether `u` reaches `v` by a path with at least `len` edges.
fn long_path(adj: &[u32], u: usize, v: usize, len: usize, visited: u32, depth: usize) -> bool {
    let mut nb = adj[u] & !visited;
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if w == v {
            if depth + 1 >= len {
                return true;
            }
            continue;
        }
        if long_path(adj, w, v, len, visited | 1 << w, depth + 1) {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub next: usize,
    pub adj: Vec<u32>,
    pub nu: usize,
    /// Edges skipped while addable; each must be blocked at the leaf.
    pub pending: Vec<usize>,
}

pub(crate) struct Search<'a> {
    pub n: usize,
    pub edges: &'a [(usize, usize)],
    pub c: Constraints,
    pub best: u64,
    pub codes: BTreeSet<u64>,
    pub cap: usize,
    pub truncated: bool,
    pub examined: u64,
}

impl<'a> Search<'a> {
    pub fn new(n: usize, edges: &'a [(usize, usize)], c: Constraints, best: u64, cap: usize) -> Self {
        Search {
            n,
            edges,
            c,
            best,
            codes: BTreeSet::new(),
            cap,
            truncated: false,
            examined: 0,
        }
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    /// New `ν` if edge `e` can be added without leaving the family.
    pub fn addable(&self, adj: &[u32], nu: usize, e: usize) -> Option<usize> {
        let (u, v) = self.edges[e];
        let mut new_nu = nu;
        if let Some(s) = self.c.matching {
            let rest = self.full_mask() & !(1 << u) & !(1 << v);
            new_nu = nu.max(1 + matching_in(adj, rest));
            if new_nu > s {
                return None;
            }
        }
        if let Some(k) = self.c.cycle {
            // A new cycle through uv has length (path length) + 1.
            if long_path(adj, u, v, k - 1, 1 << u, 0) {
                return None;
            }
        }
        Some(new_nu)
    }

    pub fn bound(&self, node: &Node) -> u64 {
        let mut adj = node.adj.clone();
        for &(u, v) in &self.edges[node.next..] {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        count_cliques(&adj, self.full_mask(), self.c.r)
    }

    pub fn root(&self) -> Node {
        Node {
            next: 0,
            adj: vec![0; self.n],
            nu: 0,
            pending: Vec::new(),
        }
    }

    /// Children of `node`: the include branch (if allowed) then the exclude branch.
    pub fn children(&self, node: &Node) -> Vec<Node> {
        let e = node.next;
        let (u, v) = self.edges[e];
        let mut out = Vec::with_capacity(2);
        let add = self.addable(&node.adj, node.nu, e);
        if let Some(nu) = add {
            let mut adj = node.adj.clone();
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            out.push(Node {
                next: e + 1,
                adj,
                nu,
                pending: node.pending.clone(),
            });
        }
        let mut pending = node.pending.clone();
        if add.is_some() {
            pending.push(e);
        }
        out.push(Node {
            next: e + 1,
            adj: node.adj.clone(),
            nu: node.nu,
            pending,
        });
        out
    }

    /// Value of a leaf, or `None` when it is not edge-maximal.
    pub fn leaf_value(&self, node: &Node) -> Option<u64> {
        if node
            .pending
            .iter()
            .any(|&e| self.addable(&node.adj, node.nu, e).is_some())
        {
            return None;
        }
        Some(count_cliques(&node.adj, self.full_mask(), self.c.r))
    }

    fn record(&mut self, node: &Node, value: u64) {
        if value > self.best {
            self.best = value;
            self.codes.clear();
            self.truncated = false;
        }
        if value == self.best {
            self.codes.insert(canonical_adj(&node.adj).0);
            if self.codes.len() > self.cap {
                self.codes.pop_last();
                self.truncated = true;
            }
        }
    }

    /// Greedy first leaf: include every edge that fits.
    pub fn greedy_value(&self) -> u64 {
        let mut node = self.root();
        while node.next < self.edges.len() {
            node = self.children(&node).swap_remove(0);
        }
        self.leaf_value(&node).expect("greedy leaf is edge-maximal")
    }

    pub fn run(&mut self, node: Node) {
        if node.next == self.edges.len() {
            self.examined += 1;
            if let Some(v) = self.leaf_value(&node) {
                self.record(&node, v);
            }
            return;
        }
        let children = self.children(&node);
        let include = children.len() == 2;
        for (i, child) in children.into_iter().enumerate() {
            // Including an edge leaves the bound unchanged; excluding one may lower it.
            let excluded = !include || i == 1;
            if excluded && self.bound(&child) < self.best {
                continue;
            }
            self.run(child);
        }
    }
}
