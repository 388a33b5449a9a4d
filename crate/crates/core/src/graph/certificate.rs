use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by the subset search.
pub const CERTIFICATE_MAX_ORDER: usize = 20;

/// A set `X` with `|X| + Σ ⌊|C_i|/2⌋ <= s` over the components `C_i` of `G - X`,
/// which certifies `ν(G) <= s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeTutteCertificate {
    /// Sorted.
    pub x: Vec<usize>,
    /// Components of `G - X` as sorted vertex lists, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
    /// `s - (|X| + Σ ⌊|C_i|/2⌋)`.
    pub slack: usize,
}

impl BergeTutteCertificate {
    pub fn component_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// `I_X(G)`: vertices isolated in `G - X`.
    pub fn isolated(&self) -> Vec<usize> {
        self.components
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect()
    }

    /// `J_X(G)`: the components with at least two vertices.
    pub fn nontrivial_components(&self) -> Vec<&Vec<usize>> {
        self.components.iter().filter(|c| c.len() >= 2).collect()
    }

    /// Recomputes the components of `G - X` from scratch and checks the
    /// inequality against `s`.
    pub fn validate(&self, g: &Graph, s: usize) -> bool {
        if self.x.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let removed = self.x.iter().fold(0u64, |m, &v| m | 1 << v);
        let comps = components_without(g, removed);
        let cost = self.x.len() + comps.iter().map(|c| c.len() / 2).sum::<usize>();
        comps == self.components && cost <= s && s - cost == self.slack
    }
}

fn components_without(g: &Graph, removed: u64) -> Vec<Vec<usize>> {
    let n = g.order();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut left = ((1u64 << n) - 1) & !removed;
    let mut out = Vec::new();
    while left != 0 {
        let seed = left.trailing_zeros() as usize;
        let mut comp = 1u64 << seed;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= left & !comp;
            comp |= next;
            frontier = next;
        }
        left &= !comp;
        out.push((0..n).filter(|&v| comp >> v & 1 == 1).collect());
    }
    out
}

/// Searches `X` by increasing size (lexicographic within a size) and returns
/// the first set satisfying the inequality, or `None` when no set does, that
/// is, when `ν(G) > s`.
pub fn berge_tutte_certificate(g: &Graph, s: usize) -> Result<Option<BergeTutteCertificate>> {
    let n = g.order();
    if n > CERTIFICATE_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "Berge-Tutte certificate search",
            size: n,
            limit: CERTIFICATE_MAX_ORDER,
        });
    }
    for size in 0..=s.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let removed = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            let comps = components_without(g, removed);
            let cost = size + comps.iter().map(|c| c.len() / 2).sum::<usize>();
            if cost <= s {
                return Ok(Some(BergeTutteCertificate {
                    x: combo,
                    components: comps,
                    slack: s - cost,
                }));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
