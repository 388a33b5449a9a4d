use std::collections::HashMap;

use super::blocks::biconnected_components;
use super::{Graph, VertexSet};

/// Outcome of a budgeted longest-cycle search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleSearch {
    /// The exact circumference (0 for forests).
    Exact(usize),
    /// The node-expansion budget ran out; `best_found` is a lower bound.
    BudgetExceeded { best_found: usize },
}

/// Length of a longest cycle, searching one block at a time.
///
/// `budget` caps the total number of search-node expansions.
pub fn circumference(g: &Graph, budget: Option<u64>) -> CycleSearch {
    longest_cycle(g, budget).0
}

/// Like [`circumference`], also returning a longest cycle found (empty for
/// forests).
pub fn longest_cycle(g: &Graph, budget: Option<u64>) -> (CycleSearch, Vec<usize>) {
    let mut remaining = budget;
    let mut best = 0;
    let mut cycle = Vec::new();
    let mut blocks = biconnected_components(g);
    blocks.sort_by_key(|b| std::cmp::Reverse(b.len()));
    for block in blocks {
        if block.len() < 3 || block.len() <= best {
            continue;
        }
        let mut search = BlockSearch::new(g, &block, Goal::Longest { best }, remaining);
        let outcome = search.run();
        if let Some(r) = remaining.as_mut() {
            *r = r.saturating_sub(search.expansions);
        }
        if search.best_len > best {
            best = search.best_len;
            cycle = search.best_cycle;
        }
        if outcome == Outcome::OutOfBudget {
            return (CycleSearch::BudgetExceeded { best_found: best }, cycle);
        }
    }
    (CycleSearch::Exact(best), cycle)
}

/// A cycle (as a vertex sequence) of length at least `k`, if one exists.
///
/// Every cycle lies inside one block, so only blocks of order `>= k` are searched.
pub fn find_cycle_at_least(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let k = k.max(3);
    biconnected_components(g)
        .into_iter()
        .filter(|b| b.len() >= k)
        .find_map(|block| {
            let mut search = BlockSearch::new(g, &block, Goal::AtLeast(k), None);
            (search.run() == Outcome::Found).then_some(search.best_cycle)
        })
}

/// Whether `g` contains a cycle of length at least `k`; stops at the first witness.
pub fn has_cycle_geq(g: &Graph, k: usize) -> bool {
    find_cycle_at_least(g, k).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Goal {
    Longest { best: usize },
    AtLeast(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Done,
    Found,
    OutOfBudget,
}

/// DFS over simple paths inside one 2-connected block.
///
/// Vertices are relabeled by rank (degree descending), and each cycle is
/// generated only from its lowest-ranked vertex. False twins (equal open
/// neighborhoods) are interchangeable, so a path may only enter the
/// lowest-ranked unused member of a twin class.
struct BlockSearch {
    adj: Vec<VertexSet>,
    labels: Vec<usize>,
    twin_class: Vec<usize>,
    classes: Vec<Vec<usize>>,
    goal: Goal,
    budget: Option<u64>,
    expansions: u64,
    best_len: usize,
    best_cycle: Vec<usize>,
    start: usize,
    path: Vec<usize>,
    avail: VertexSet,
}

impl BlockSearch {
    fn new(g: &Graph, block: &[usize], goal: Goal, budget: Option<u64>) -> Self {
        let local = g.induced(block);
        let m = block.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(local.degree(v)), v));
        let mut rank = vec![0; m];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        let ranked = local.permuted(&rank);
        let adj: Vec<VertexSet> = (0..m).map(|v| ranked.neighbors(v).clone()).collect();
        let labels = order.iter().map(|&v| block[v]).collect();

        let mut by_row: HashMap<&VertexSet, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut twin_class = vec![0; m];
        for v in 0..m {
            let id = *by_row.entry(&adj[v]).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(v);
            twin_class[v] = id;
        }

        let best_len = match goal {
            Goal::Longest { best } => best,
            Goal::AtLeast(_) => 0,
        };
        BlockSearch {
            adj,
            labels,
            twin_class,
            classes,
            goal,
            budget,
            expansions: 0,
            best_len,
            best_cycle: Vec::new(),
            start: 0,
            path: Vec::new(),
            avail: VertexSet::empty(m),
        }
    }

    fn target(&self) -> usize {
        match self.goal {
            Goal::Longest { .. } => self.best_len + 1,
            Goal::AtLeast(k) => k,
        }
    }

    fn run(&mut self) -> Outcome {
        let m = self.adj.len();
        for s in 0..m {
            if m - s < self.target() {
                break;
            }
            // A smaller twin of `s` generates the image of every cycle found from `s`.
            if self.classes[self.twin_class[s]][0] < s {
                continue;
            }
            self.start = s;
            self.avail = VertexSet::empty(m);
            for v in s + 1..m {
                self.avail.insert(v);
            }
            self.path.clear();
            self.path.push(s);
            match self.extend(s) {
                Outcome::Done => {}
                other => return other,
            }
        }
        Outcome::Done
    }

    fn extend(&mut self, v: usize) -> Outcome {
        self.expansions += 1;
        if let Some(b) = self.budget {
            if self.expansions > b {
                return Outcome::OutOfBudget;
            }
        }
        let s = self.start;
        let len = self.path.len();
        if len >= 3 && self.adj[v].contains(s) && len > self.best_len {
            self.best_len = len;
            self.best_cycle = self.path.iter().map(|&x| self.labels[x]).collect();
            if matches!(self.goal, Goal::AtLeast(k) if len >= k) {
                return Outcome::Found;
            }
        }

        // Vertices still usable from here; the cycle can grow by at most this many.
        let mut reach = self.adj[v].intersection(&self.avail);
        let mut frontier = reach.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.adj.len());
            for x in frontier.iter() {
                next.union_with(&self.adj[x]);
            }
            next.intersect_with(&self.avail);
            next.difference_with(&reach);
            reach.union_with(&next);
            frontier = next;
        }
        if len + reach.len() < self.target() {
            return Outcome::Done;
        }
        if !self.adj[v].contains(s) && !reach.intersects(&self.adj[s]) {
            return Outcome::Done;
        }

        let candidates: Vec<usize> = self.adj[v].intersection(&self.avail).iter().collect();
        for w in candidates {
            let class = &self.classes[self.twin_class[w]];
            if class.len() > 1 {
                let lowest = class
                    .iter()
                    .copied()
                    .find(|&x| self.avail.contains(x))
                    .expect("w itself is available");
                if lowest != w {
                    continue;
                }
            }
            self.avail.remove(w);
            self.path.push(w);
            let outcome = self.extend(w);
            self.path.pop();
            self.avail.insert(w);
            if outcome != Outcome::Done {
                return outcome;
            }
        }
        Outcome::Done
    }
}
