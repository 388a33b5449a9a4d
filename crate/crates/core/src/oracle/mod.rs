//! Exhaustive ground truth for `ex(n, K_r, F)` at small `n`.

mod canon;
mod search;

use std::collections::BTreeSet;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

pub use canon::{canonical_code, canonical_form, graph_from_code, CANON_MAX_ORDER};

use crate::error::{Error, Result};
use crate::formulas::{self, ExtremalValue};
use crate::graph::{is_family_free, ForbiddenFamily, Graph};
use search::{Constraints, Node, Search};

/// Largest order the oracle accepts.
pub const ORACLE_MAX_N: usize = 8;

/// Canonical witnesses kept per run (the smallest codes win).
pub const WITNESS_CAP: usize = 100;

/// Edges decided before the search is split into independent chunks.
const CHUNK_DEPTH: usize = 10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleOptions {
    /// Worker threads; `None` uses the global pool, `Some(1)` runs serially.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub n: usize,
    pub family: ForbiddenFamily,
    /// `ex(n, K_r, F)`.
    pub max: u64,
    /// Edge-maximal extremal graphs in canonical form, ordered by canonical code.
    pub witnesses: Vec<Graph>,
    /// More than [`WITNESS_CAP`] classes attained the maximum.
    pub witnesses_truncated: bool,
    /// Leaves of the search tree reached.
    pub examined: u64,
    pub elapsed: Duration,
}

impl OracleResult {
    /// Whether some witness is isomorphic to `g`.
    pub fn has_witness_isomorphic_to(&self, g: &Graph) -> Result<bool> {
        let code = canonical_code(g)?;
        for w in &self.witnesses {
            if w.order() == g.order() && canonical_code(w)? == code {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > ORACLE_MAX_N {
        return Err(Error::SizeLimit {
            what: "oracle order",
            size: n,
            limit: ORACLE_MAX_N,
        });
    }
    Ok(())
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    e
}

struct Partial {
    best: u64,
    codes: BTreeSet<u64>,
    truncated: bool,
    examined: u64,
}

fn merge(a: Partial, b: Partial) -> Partial {
    use std::cmp::Ordering::*;
    match a.best.cmp(&b.best) {
        Greater => Partial {
            examined: a.examined + b.examined,
            ..a
        },
        Less => Partial {
            examined: a.examined + b.examined,
            ..b
        },
        Equal => {
            let mut codes = a.codes;
            codes.extend(b.codes);
            let mut truncated = a.truncated || b.truncated;
            while codes.len() > WITNESS_CAP {
                codes.pop_last();
                truncated = true;
            }
            Partial {
                best: a.best,
                codes,
                truncated,
                examined: a.examined + b.examined,
            }
        }
    }
}

/// `ex(n, K_r, F)` by exhaustive search, using every available core.
pub fn brute_force_ex(n: usize, fam: &ForbiddenFamily) -> Result<OracleResult> {
    brute_force_ex_with(n, fam, &OracleOptions::default())
}

/// As [`brute_force_ex`]. The result (including `examined`) does not depend
/// on `opts.jobs`.
pub fn brute_force_ex_with(
    n: usize,
    fam: &ForbiddenFamily,
    opts: &OracleOptions,
) -> Result<OracleResult> {
    check_order(n)?;
    let start = Instant::now();
    let edges = all_pairs(n);
    let c = Constraints::from(fam);
    let seed = Search::new(n, &edges, c, 0, WITNESS_CAP).greedy_value();

    // Split on the first few decisions; each prefix is a contiguous block
    // of the edge-subset index space.
    let splitter = Search::new(n, &edges, c, seed, WITNESS_CAP);
    let depth = CHUNK_DEPTH.min(edges.len());
    let mut frontier: Vec<Node> = vec![splitter.root()];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for node in &frontier {
            let children = splitter.children(node);
            let include = children.len() == 2;
            for (i, child) in children.into_iter().enumerate() {
                if (!include || i == 1) && splitter.bound(&child) < seed {
                    continue;
                }
                next.push(child);
            }
        }
        frontier = next;
    }

    let run_chunk = |node: Node| {
        let mut s = Search::new(n, &edges, c, seed, WITNESS_CAP);
        s.run(node);
        Partial {
            best: s.best,
            codes: s.codes,
            truncated: s.truncated,
            examined: s.examined,
        }
    };
    let empty = || Partial {
        best: seed,
        codes: BTreeSet::new(),
        truncated: false,
        examined: 0,
    };
    let total = match opts.jobs {
        Some(0) => return Err(Error::param("jobs", "must be >= 1")),
        Some(1) => frontier.into_iter().map(run_chunk).fold(empty(), merge),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::param("jobs", e.to_string()))?
            .install(|| {
                frontier
                    .into_par_iter()
                    .map(run_chunk)
                    .reduce(empty, merge)
            }),
        None => frontier
            .into_par_iter()
            .map(run_chunk)
            .reduce(empty, merge),
    };

    Ok(OracleResult {
        n,
        family: *fam,
        max: total.best,
        witnesses: total.codes.iter().map(|&c| graph_from_code(n, c)).collect(),
        witnesses_truncated: total.truncated,
        examined: total.examined,
        elapsed: start.elapsed(),
    })
}

/// Every `F`-free graph on `n` vertices, once per isomorphism class, in
/// canonical form ordered by canonical code.
///
/// Built one vertex at a time: deleting a vertex keeps a graph `F`-free,
/// so each class on `n` vertices extends some class on `n - 1`.
pub fn enumerate_family_free(n: usize, fam: &ForbiddenFamily) -> Result<Vec<Graph>> {
    check_order(n)?;
    let mut level: Vec<Graph> = vec![Graph::new(0)];
    for m in 1..=n {
        let mut codes = BTreeSet::new();
        for g in &level {
            for mask in 0u32..1 << (m - 1) {
                let mut h = Graph::new(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, m - 1);
                    }
                }
                if is_family_free(&h, fam).is_free() {
                    codes.insert(canonical_code(&h)?);
                }
            }
        }
        level = codes.into_iter().map(|c| graph_from_code(m, c)).collect();
    }
    Ok(level)
}

/// Which cycle family a formula is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `C_{>=2k+1}`.
    Odd,
    /// `C_{>=2k}`.
    Even,
}

impl Parity {
    pub fn cycle_threshold(self, k: u64) -> u64 {
        match self {
            Parity::Odd => 2 * k + 1,
            Parity::Even => 2 * k,
        }
    }
}

/// The formula value for `parity` (edge count form when `r = 2` and even).
pub fn formula_value(parity: Parity, n: u64, k: u64, s: u64, r: u64) -> Result<ExtremalValue> {
    match parity {
        Parity::Odd => formulas::ex_odd(n, k, s, r),
        Parity::Even if r == 2 => formulas::ex_even_edges(n, k, s),
        Parity::Even => formulas::ex_even(n, k, s, r),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Agree,
    /// The oracle exceeds the formula: the graph is too small for the formula.
    OracleAbove,
    /// The formula exceeds the oracle; impossible when the witness is valid.
    OracleBelow,
    /// No formula value at this order (the witness does not fit).
    Undefined(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionRow {
    pub n: u64,
    pub oracle: u64,
    pub formula: Option<BigInt>,
    pub asymptotic_warning: bool,
    pub status: RowStatus,
}

impl RegionRow {
    pub fn note(&self) -> String {
        match (&self.status, self.asymptotic_warning) {
            (RowStatus::Agree, _) => "agree".into(),
            (RowStatus::OracleAbove, true) => "oracle above formula; below asymptotic threshold".into(),
            (RowStatus::OracleAbove, false) => "oracle above formula".into(),
            (RowStatus::OracleBelow, _) => "formula above oracle".into(),
            (RowStatus::Undefined(why), _) => format!("formula undefined: {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionReport {
    pub k: u64,
    pub s: u64,
    pub r: u64,
    pub parity: Parity,
    pub family: ForbiddenFamily,
    pub rows: Vec<RegionRow>,
    /// Smallest `n` from which every row in range agrees.
    pub agreement_from: Option<u64>,
}

/// Oracle versus formula for each `n` in `range`.
pub fn verify_formula_region(
    k: u64,
    s: u64,
    r: u64,
    parity: Parity,
    range: RangeInclusive<u64>,
    opts: &OracleOptions,
) -> Result<RegionReport> {
    check_order(*range.end() as usize)?;
    let family = ForbiddenFamily::new(
        Some(parity.cycle_threshold(k) as usize),
        Some(s as usize),
        r as usize,
    )?;
    let mut rows = Vec::new();
    for n in range {
        let oracle = brute_force_ex_with(n as usize, &family, opts)?.max;
        let row = match formula_value(parity, n, k, s, r) {
            Ok(v) => {
                let status = match BigInt::from(oracle).cmp(&v.value) {
                    std::cmp::Ordering::Equal => RowStatus::Agree,
                    std::cmp::Ordering::Greater => RowStatus::OracleAbove,
                    std::cmp::Ordering::Less => RowStatus::OracleBelow,
                };
                RegionRow {
                    n,
                    oracle,
                    formula: Some(v.value),
                    asymptotic_warning: v.asymptotic_warning,
                    status,
                }
            }
            Err(Error::InvalidParameter { name: "n", reason }) => RegionRow {
                n,
                oracle,
                formula: None,
                asymptotic_warning: true,
                status: RowStatus::Undefined(reason),
            },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    let agreement_from = rows
        .iter()
        .rev()
        .take_while(|r| r.status == RowStatus::Agree)
        .last()
        .map(|r| r.n);
    Ok(RegionReport {
        k,
        s,
        r,
        parity,
        family,
        rows,
        agreement_from,
    })
}
