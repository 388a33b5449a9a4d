use super::{find_cycle_at_least, longest_cycle, maximum_matching, CycleSearch, Graph};
use crate::error::{Error, Result};

const WITNESS_BUDGET: u64 = 200_000;

/// `{C_{>=k}, M_{s+1}}` together with the counted clique order `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenFamily {
    /// Forbid every cycle of length `>= k`.
    pub cycle_min_len: Option<usize>,
    /// Require `ν(G) <= s`.
    pub matching_bound: Option<usize>,
    /// The counted pattern `K_r`.
    pub clique_order: usize,
}

impl ForbiddenFamily {
    pub fn new(
        cycle_min_len: Option<usize>,
        matching_bound: Option<usize>,
        clique_order: usize,
    ) -> Result<Self> {
        if let Some(k) = cycle_min_len {
            if k < 3 {
                return Err(Error::param("k", format!("cycle length {k} must be >= 3")));
            }
        }
        if clique_order < 2 {
            return Err(Error::param("r", format!("clique order {clique_order} must be >= 2")));
        }
        Ok(ForbiddenFamily {
            cycle_min_len,
            matching_bound,
            clique_order,
        })
    }

    /// Short human-readable form, e.g. `{C>=5, M6}; K2`.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(k) = self.cycle_min_len {
            parts.push(format!("C>={k}"));
        }
        if let Some(s) = self.matching_bound {
            parts.push(format!("M{}", s + 1));
        }
        format!("{{{}}}; K{}", parts.join(", "), self.clique_order)
    }
}

/// Which constraint failed, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A cycle of length `>= k`, as a vertex sequence.
    LongCycle { min_len: usize, cycle: Vec<usize> },
    /// `s + 1` disjoint edges.
    LargeMatching { bound: usize, edges: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub violations: Vec<Violation>,
    /// `ν(G)`, computed whenever a matching bound is present.
    pub matching_number: Option<usize>,
}

impl FamilyReport {
    pub fn is_free(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks both constraints of `fam` and reports every violated one.
pub fn is_family_free(g: &Graph, fam: &ForbiddenFamily) -> FamilyReport {
    let mut violations = Vec::new();
    if let Some(k) = fam.cycle_min_len {
        if let Some(mut cycle) = find_cycle_at_least(g, k) {
            // Prefer a longest cycle as the witness when it is cheap to find.
            if let (CycleSearch::Exact(_), longest) = longest_cycle(g, Some(WITNESS_BUDGET)) {
                cycle = longest;
            }
            violations.push(Violation::LongCycle { min_len: k, cycle });
        }
    }
    let mut matching_number = None;
    if let Some(s) = fam.matching_bound {
        let m = maximum_matching(g);
        matching_number = Some(m.len());
        if m.len() > s {
            violations.push(Violation::LargeMatching {
                bound: s,
                edges: m.into_iter().take(s + 1).collect(),
            });
        }
    }
    FamilyReport {
        violations,
        matching_number,
    }
}
