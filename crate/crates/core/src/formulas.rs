//! Exact closed-form values.
//!
//! Every quantity is an arbitrary-precision integer. Offsets such as `h` and
//! `g` may be negative; they are added to a linear term in `n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::constructors::BlockStarSpec;
use crate::error::{Error, Result};
use crate::optimizer::{self, Family, FeasibleTriple};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn int(x: u64) -> i64 {
    i64::try_from(x).expect("parameter fits in i64")
}

/// Orders below this multiple of `s` get `asymptotic_warning = true`.
pub const WARNING_FACTOR: u64 = 6;

/// Scan limit for [`tau`].
pub const TAU_SCAN_LIMIT: u64 = 1_000_000;

/// `f_b(n, k, a) = C(k-a, b) + (n-k+a) C(a, b-1)`, the number of `K_b` in `H_{n,k,a}`.
pub fn f_value(n: u64, k: u64, a: u64, b: u64) -> Result<BigInt> {
    if a < 1 {
        return Err(Error::param("a", "must be >= 1"));
    }
    if 2 * a > k {
        return Err(Error::param("k", format!("need k >= 2a, got k = {k}, a = {a}")));
    }
    if n < k - a {
        return Err(Error::param("n", format!("need n >= k - a = {}", k - a)));
    }
    if b < 1 {
        return Err(Error::param("b", "must be >= 1"));
    }
    let (n, k, a, b) = (int(n), int(k), int(a), int(b));
    Ok(binom(k - a, b) + BigInt::from(n - k + a) * binom(a, b - 1))
}

/// `τ_{k,r}`: the least `k0` with `k0 C(k, r-1) < C(k0+1, r)`.
pub fn tau(k: u64, r: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::param("k", "must be >= 2"));
    }
    if r < 2 {
        return Err(Error::param("r", "must be >= 2"));
    }
    let per = binom(int(k), int(r) - 1);
    for k0 in 0..=TAU_SCAN_LIMIT {
        if BigInt::from(k0) * &per < binom(int(k0) + 1, int(r)) {
            return Ok(k0);
        }
    }
    Err(Error::param(
        "k",
        format!("no threshold below {TAU_SCAN_LIMIT} for k = {k}, r = {r}"),
    ))
}

/// Which branch of the odd-cycle formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OddCase {
    /// `2k <= τ`: the witness is `H_{n,2k+1,k}` alone.
    Case1,
    /// `2t+1 < τ <= 2k-1`: `q` attached copies of `K_{2k}`.
    Case2,
    /// `2t+1 >= τ`: `q` copies of `K_{2k}` and one `K_{2t+2}`.
    Case3,
}

/// Decomposition `s = k + q(k-1) + t` with `0 <= t <= k-2`, plus the case tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCaseParams {
    pub k: u64,
    pub r: u64,
    pub s: u64,
    pub q: u64,
    pub t: u64,
    pub tau: u64,
    /// `k + 1 + q(2k-1) + (2t+1)`.
    pub a_coeff: u64,
    pub case: OddCase,
}

impl OddCaseParams {
    pub fn new(k: u64, r: u64, s: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::param("k", "must be >= 2"));
        }
        if r < 2 {
            return Err(Error::param("r", "must be >= 2"));
        }
        if r > k + 1 {
            return Err(Error::param("r", format!("need r <= k + 1 = {}", k + 1)));
        }
        if s < 2 * k + 1 {
            return Err(Error::param("s", format!("need s >= 2k + 1 = {}", 2 * k + 1)));
        }
        let q = (s - k) / (k - 1);
        let t = s - k - q * (k - 1);
        let tau = tau(k, r)?;
        let case = if 2 * k <= tau {
            OddCase::Case1
        } else if 2 * t + 1 < tau {
            OddCase::Case2
        } else {
            OddCase::Case3
        };
        Ok(OddCaseParams {
            k,
            r,
            s,
            q,
            t,
            tau,
            a_coeff: k + 1 + q * (2 * k - 1) + 2 * t + 1,
            case,
        })
    }
}

/// Decomposition `s = q(k-1) + t` with `0 <= t <= k-2`; `ε = [t >= 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCaseParams {
    pub k: u64,
    pub s: u64,
    pub q: u64,
    pub t: u64,
    pub epsilon: u64,
}

impl EvenCaseParams {
    pub fn new(k: u64, s: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::param("k", "must be >= 2"));
        }
        if s < k - 1 {
            return Err(Error::param("s", format!("need s >= k - 1 = {}", k - 1)));
        }
        let q = s / (k - 1);
        let t = s - q * (k - 1);
        Ok(EvenCaseParams {
            k,
            s,
            q,
            t,
            epsilon: u64::from(t >= 1),
        })
    }
}

/// `h(r, k, s)`, the constant term of the odd-cycle value.
pub fn h_value(r: u64, k: u64, s: u64) -> Result<BigInt> {
    let p = OddCaseParams::new(k, r, s)?;
    Ok(h_from_params(&p))
}

fn h_from_params(p: &OddCaseParams) -> BigInt {
    let (k, r, q, t) = (int(p.k), int(p.r), int(p.q), int(p.t));
    let per = binom(k, r - 1);
    match p.case {
        OddCase::Case1 => binom(k + 1, r) - BigInt::from(k + 1) * per,
        OddCase::Case2 => {
            BigInt::from(q) * binom(2 * k, r) + binom(k + 1, r)
                - BigInt::from(k + 1 + q * (2 * k - 1)) * per
        }
        OddCase::Case3 => {
            BigInt::from(q) * binom(2 * k, r) + binom(2 * t + 2, r) + binom(k + 1, r)
                - BigInt::from(int(p.a_coeff)) * per
        }
    }
}

/// `g(x, y, z)` for the even-cycle maximization.
pub fn g_value(x: u64, y: u64, z: u64, k: u64, r: u64) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::param("k", "must be >= 2"));
    }
    if z < 1 || z > 2 * k - 1 {
        return Err(Error::param("z", format!("need 1 <= z <= 2k - 1 = {}", 2 * k - 1)));
    }
    let (x, y, z, k, r) = (int(x), int(y), int(z), int(k), int(r));
    Ok(BigInt::from(x) * binom(2 * k - 1, r)
        + BigInt::from(y) * binom(2 * k - 2, r)
        + binom(z, r)
        + binom(k + 1, r)
        - BigInt::from(k + 1 + x * (2 * k - 2) + y * (2 * k - 3) + (z - 1)) * binom(k - 1, r - 1))
}

/// Which construction produced an [`ExtremalValue`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Odd(OddCase),
    /// Even cycles, central block `H_{m,2k,k-1}` (ν(B1) = k).
    EvenT1,
    /// Even cycles, central block `H_{m,2k-1,k-1}` (ν(B1) = k-1).
    EvenT2,
    /// Edge count, even cycles, `ε = 0`.
    EvenEdgesSt1,
    /// Edge count, even cycles, `ε = 1`.
    EvenEdgesSt2,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::Odd(OddCase::Case1) => "Case1",
            Regime::Odd(OddCase::Case2) => "Case2",
            Regime::Odd(OddCase::Case3) => "Case3",
            Regime::EvenT1 => "T1",
            Regime::EvenT2 => "T2",
            Regime::EvenEdgesSt1 => "St1",
            Regime::EvenEdgesSt2 => "St2",
        }
    }
}

/// A formula value together with the witness that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalValue {
    pub value: BigInt,
    pub regime: Regime,
    pub witness: BlockStarSpec,
    /// Set when `n < 6s`; the formula is only claimed for large `n`.
    pub asymptotic_warning: bool,
    /// Maximizing triple, for the even-cycle optimization.
    pub triple: Option<FeasibleTriple>,
}

fn warn(n: u64, s: u64) -> bool {
    n < WARNING_FACTOR.saturating_mul(s)
}

/// `ex(n, K_r, {C_{>=2k+1}, M_{s+1}}) = C(k, r-1) n + h(r, k, s)` for large `n`.
pub fn ex_odd(n: u64, k: u64, s: u64, r: u64) -> Result<ExtremalValue> {
    let p = OddCaseParams::new(k, r, s)?;
    let mut attached = vec![2 * k; p.q as usize];
    let removed = match p.case {
        OddCase::Case1 => {
            attached.clear();
            0
        }
        OddCase::Case2 => p.q * (2 * k - 1),
        OddCase::Case3 => {
            attached.push(2 * p.t + 2);
            p.q * (2 * k - 1) + 2 * p.t + 1
        }
    };
    debug_assert_eq!(removed, attached.iter().map(|c| c - 1).sum::<u64>());
    let witness = BlockStarSpec::h_star(n, 2 * k + 1, k, attached)?;
    let value = binom(int(k), int(r) - 1) * BigInt::from(n) + h_from_params(&p);
    Ok(ExtremalValue {
        value,
        regime: Regime::Odd(p.case),
        witness,
        asymptotic_warning: warn(n, s),
        triple: None,
    })
}

/// `ex(n, K_r, {C_{>=2k}, M_{s+1}})` via the finite maximization over `T1`, `T2`.
///
/// Ties between the two branches go to `T1`. `T1` is empty when `s = k - 1`.
pub fn ex_even(n: u64, k: u64, s: u64, r: u64) -> Result<ExtremalValue> {
    if k < 3 {
        return Err(Error::param("k", "must be >= 3 (use ex_even_edges for k = 2)"));
    }
    if r < 2 {
        return Err(Error::param("r", "must be >= 2"));
    }
    if k < r {
        return Err(Error::param("r", format!("need r <= k = {k}")));
    }
    if s < k - 1 {
        return Err(Error::param("s", format!("need s >= k - 1 = {}", k - 1)));
    }
    let best = optimizer::even_optimum(k, r, s)?;
    let witness = optimizer::witness_for_triple(n, k, &best.triple)?;
    let (offset, triple) = (best.offset, best.triple);
    let regime = match triple.family {
        Family::T1 => Regime::EvenT1,
        Family::T2 => Regime::EvenT2,
    };
    Ok(ExtremalValue {
        value: binom(int(k) - 1, int(r) - 1) * BigInt::from(n) + offset,
        regime,
        witness,
        asymptotic_warning: warn(n, s),
        triple: Some(triple),
    })
}

/// `ex(n, {C_{>=2k}, M_{s+1}}) = (k-1)n - C(k,2) + (k-1)(q-1) + ε`.
pub fn ex_even_edges(n: u64, k: u64, s: u64) -> Result<ExtremalValue> {
    let p = EvenCaseParams::new(k, s)?;
    let witness = if p.epsilon == 0 {
        BlockStarSpec::st1(n, k, p.q)?
    } else {
        BlockStarSpec::st2(n, k, p.q)?
    };
    let (ki, q) = (int(k), int(p.q));
    let value = BigInt::from(ki - 1) * BigInt::from(n) - binom(ki, 2)
        + BigInt::from((ki - 1) * (q - 1))
        + BigInt::from(int(p.epsilon));
    Ok(ExtremalValue {
        value,
        regime: if p.epsilon == 0 {
            Regime::EvenEdgesSt1
        } else {
            Regime::EvenEdgesSt2
        },
        witness,
        asymptotic_warning: warn(n, s),
        triple: None,
    })
}

/// `ex(n, M_{s+1}) = max{ f_2(n, 2s+1, s), C(2s+1, 2) }`.
///
/// The expression is evaluated as written; it is the true extremal number
/// only for `n >= 2s + 1`. Below that every graph on `n` vertices is
/// admissible and the answer is `C(n, 2)`.
pub fn ex_matching_only(n: u64, s: u64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::param("n", "must be >= 1"));
    }
    if s < 1 {
        return Err(Error::param("s", "must be >= 1"));
    }
    let (ni, si) = (int(n), int(s));
    // f_2(n, 2s+1, s) written out so that n < s + 1 is allowed.
    let f2 = binom(si + 1, 2) + BigInt::from(ni - si - 1) * BigInt::from(si);
    Ok(f2.max(binom(2 * si + 1, 2)))
}

/// Woodall: `q C(k-1, 2) + C(p+1, 2)` where `n = q(k-2) + p + 1`, the
/// maximum size of a `C_{>=k}`-free graph of order `n`.
pub fn woodall_bound(n: u64, k: u64) -> Result<BigInt> {
    let (q, p) = woodall_decomposition(n, k)?;
    Ok(BigInt::from(q) * binom(int(k) - 1, 2) + binom(int(p) + 1, 2))
}

/// `(q, p)` with `n = q(k-2) + p + 1`, `0 <= p < k-2`.
pub fn woodall_decomposition(n: u64, k: u64) -> Result<(u64, u64)> {
    if k < 3 {
        return Err(Error::param("k", "must be >= 3"));
    }
    if n < 1 {
        return Err(Error::param("n", "must be >= 1"));
    }
    Ok(((n - 1) / (k - 2), (n - 1) % (k - 2)))
}
