//! The finite maximization of `g(x, y, z)` over `T1` and `T2`.

use std::fmt;

use num_bigint::BigInt;

use crate::constructors::BlockStarSpec;
use crate::error::{Error, Result};
use crate::formulas::{binom, g_value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(k-1)x + (k-2)y + ⌊(z-1)/2⌋ + k <= s`.
    T1,
    /// `(k-1)x + (k-2)y + ⌊(z-1)/2⌋ + k - 1 <= s`.
    T2,
}

impl Family {
    fn base(self, k: u64) -> u64 {
        match self {
            Family::T1 => k,
            Family::T2 => k - 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::T1 => "T1",
            Family::T2 => "T2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibleTriple {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub family: Family,
    pub g: BigInt,
}

impl FeasibleTriple {
    pub fn key(&self) -> (u64, u64, u64) {
        (self.x, self.y, self.z)
    }
}

/// Whether `(x, y, z)` satisfies the defining inequality of `family`.
pub fn is_feasible(k: u64, s: u64, family: Family, x: u64, y: u64, z: u64) -> bool {
    (1..=2 * k - 1).contains(&z)
        && (k - 1) * x + (k - 2) * y + (z - 1) / 2 + family.base(k) <= s
}

fn check(k: u64, r: u64, s: u64) -> Result<()> {
    if k < 3 {
        return Err(Error::param(
            "k",
            "must be >= 3; for k = 2 the y coefficient vanishes and the set is unbounded",
        ));
    }
    if r < 2 {
        return Err(Error::param("r", "must be >= 2"));
    }
    if s < k - 1 {
        return Err(Error::param("s", format!("need s >= k - 1 = {}", k - 1)));
    }
    Ok(())
}

/// Every triple of `family`, in lexicographic `(x, y, z)` order.
///
/// `T1` is empty when `s = k - 1`.
pub fn enumerate_feasible(k: u64, r: u64, s: u64, family: Family) -> Result<Vec<FeasibleTriple>> {
    check(k, r, s)?;
    let mut out = Vec::new();
    let Some(slack) = s.checked_sub(family.base(k)) else {
        return Ok(out);
    };
    for x in 0..=slack / (k - 1) {
        let after_x = slack - (k - 1) * x;
        for y in 0..=after_x / (k - 2) {
            let after_y = after_x - (k - 2) * y;
            let z_max = (2 * after_y + 2).min(2 * k - 1);
            for z in 1..=z_max {
                out.push(FeasibleTriple {
                    x,
                    y,
                    z,
                    family,
                    g: g_value(x, y, z, k, r)?,
                });
            }
        }
    }
    Ok(out)
}

/// `max g` over `family` with the lexicographically smallest maximizer.
pub fn maximize_g(k: u64, r: u64, s: u64, family: Family) -> Result<(BigInt, FeasibleTriple)> {
    let mut best: Option<FeasibleTriple> = None;
    for t in enumerate_feasible(k, r, s, family)? {
        if best.as_ref().is_none_or(|b| t.g > b.g) {
            best = Some(t);
        }
    }
    let best = best.ok_or(Error::EmptyFeasibleSet)?;
    Ok((best.g.clone(), best))
}

/// Winning triple of `max{ max_T1 g, max_T2 g - C(k-1, r-2) }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenOptimum {
    /// The `n`-free offset of the even-cycle value.
    pub offset: BigInt,
    pub triple: FeasibleTriple,
}

/// Combines both families; ties go to `T1`, an empty `T1` never wins.
pub fn even_optimum(k: u64, r: u64, s: u64) -> Result<EvenOptimum> {
    let t1 = match maximize_g(k, r, s, Family::T1) {
        Ok(best) => Some(best),
        Err(Error::EmptyFeasibleSet) => None,
        Err(e) => return Err(e),
    };
    let (g2, triple2) = maximize_g(k, r, s, Family::T2)?;
    let g2 = g2 - binom(k as i64 - 1, r as i64 - 2);
    Ok(match t1 {
        Some((g1, triple)) if g1 >= g2 => EvenOptimum { offset: g1, triple },
        _ => EvenOptimum {
            offset: g2,
            triple: triple2,
        },
    })
}

/// Renders a triple: central `H_{m,2k,k-1}` (T1) or `H_{m,2k-1,k-1}` (T2),
/// `x` copies of `K_{2k-1}`, `y` of `K_{2k-2}`, and `K_z` when `z >= 2`.
pub fn witness_for_triple(n: u64, k: u64, triple: &FeasibleTriple) -> Result<BlockStarSpec> {
    let central_k = match triple.family {
        Family::T1 => 2 * k,
        Family::T2 => 2 * k - 1,
    };
    let mut attached = vec![2 * k - 1; triple.x as usize];
    attached.extend(std::iter::repeat_n(2 * k - 2, triple.y as usize));
    if triple.z >= 2 {
        attached.push(triple.z);
    }
    BlockStarSpec::h_star(n, central_k, k - 1, attached)
}

/// The block-star spec attaining the even-cycle value at order `n`.
pub fn extremal_even_witness(n: u64, k: u64, r: u64, s: u64) -> Result<BlockStarSpec> {
    witness_for_triple(n, k, &even_optimum(k, r, s)?.triple)
}
