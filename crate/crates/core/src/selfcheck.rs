//! A fast embedded invariant suite, run by `turan selfcheck`.

use num_bigint::BigInt;

use crate::constructors::{build_extremal_odd, build_h, build_st1, build_st2, build_woodall_g0, HGraphParams};
use crate::formulas::{self, binom};
use crate::graph::{
    berge_tutte_certificate, block_decomposition, count_cliques, has_cycle_geq, is_family_free,
    max_matching, star_transform, ForbiddenFamily, Graph,
};
use crate::oracle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// First failure, or a short summary when passed.
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

const CHECKS: &[(&str, Check)] = &[
    ("tau_k2_is_2k", tau_k2),
    ("odd_r2_corollary", odd_r2),
    ("even_optimizer_matches_edges", even_consistency),
    ("h_graph_identities", h_identities),
    ("odd_witness_tightness", odd_witnesses),
    ("st_graph_edges", st_edges),
    ("woodall_g0", woodall),
    ("star_transform_preserves_counts", star_counts),
    ("certificate_iff_matching", certificates),
    ("oracle_small_values", oracle_values),
];

/// Runs every check; the suite passes iff every outcome passes.
pub fn run_selfcheck() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|&(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome { name, passed, detail }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn tau_k2() -> Result<String, String> {
    for k in 2..=12 {
        let t = formulas::tau(k, 2).map_err(err)?;
        ensure(t == 2 * k, || format!("tau({k},2) = {t}"))?;
    }
    Ok("k = 2..12".into())
}

fn odd_r2() -> Result<String, String> {
    let mut cases = 0;
    for k in 2..=5u64 {
        for s in 2 * k + 1..=4 * k {
            for n in [2 * k + 1, 50, 1_000_000] {
                let v = formulas::ex_odd(n, k, s, 2).map_err(err)?.value;
                let expect = binom(k as i64, 2) + BigInt::from(k) * BigInt::from(n - k);
                ensure(v == expect, || format!("ex_odd({n},{k},{s},2) = {v}, expected {expect}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn even_consistency() -> Result<String, String> {
    for k in 3..=8u64 {
        for s in k - 1..=4 * k {
            let n = 1000;
            let a = formulas::ex_even(n, k, s, 2).map_err(err)?.value;
            let b = formulas::ex_even_edges(n, k, s).map_err(err)?.value;
            ensure(a == b, || format!("k={k} s={s}: {a} vs {b}"))?;
        }
    }
    Ok("k = 3..8".into())
}

fn h_identities() -> Result<String, String> {
    for k in 4..=8u64 {
        for a in 2..=(k - 1) / 2 {
            for n in k..=14 {
                let g = build_h(HGraphParams::new(n, k, a).map_err(err)?).map_err(err)?;
                for r in 2..=5u64 {
                    let f = formulas::f_value(n, k, a, r).map_err(err)?;
                    let c = BigInt::from(count_cliques(&g, r as usize));
                    ensure(c == f, || format!("N_{r}(H_{{{n},{k},{a}}}) = {c}, f = {f}"))?;
                }
                ensure(max_matching(&g) as u64 == k / 2, || format!("matching of H_{{{n},{k},{a}}}"))?;
                ensure(!has_cycle_geq(&g, k as usize), || format!("long cycle in H_{{{n},{k},{a}}}"))?;
            }
        }
    }
    Ok("k = 4..8, n <= 14".into())
}

fn odd_witnesses() -> Result<String, String> {
    let mut cases = 0;
    for k in 2..=4u64 {
        for r in 2..=k + 1 {
            for s in [2 * k + 1, 3 * k, 4 * k] {
                let v = formulas::ex_odd(40, k, s, r).map_err(err)?;
                let g = build_extremal_odd(40, k, s, r).map_err(err)?;
                let c = BigInt::from(count_cliques(&g, r as usize));
                ensure(c == v.value, || format!("k={k} r={r} s={s}: {c} vs {}", v.value))?;
                let fam = ForbiddenFamily::new(Some(2 * k as usize + 1), Some(s as usize), r as usize)
                    .map_err(err)?;
                ensure(is_family_free(&g, &fam).is_free(), || format!("k={k} r={r} s={s} not free"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} witnesses at n = 40"))
}

fn st_edges() -> Result<String, String> {
    for k in 2..=5u64 {
        for q in 1..=4u64 {
            let n = 40;
            let s1 = q * (k - 1);
            let e1 = build_st1(n, k, q).map_err(err)?.size();
            let v1 = formulas::ex_even_edges(n, k, s1).map_err(err)?.value;
            ensure(BigInt::from(e1) == v1, || format!("St1 k={k} q={q}: {e1} vs {v1}"))?;
            if k >= 3 {
                let e2 = build_st2(n, k, q).map_err(err)?.size();
                let v2 = formulas::ex_even_edges(n, k, s1 + 1).map_err(err)?.value;
                ensure(BigInt::from(e2) == v2, || format!("St2 k={k} q={q}: {e2} vs {v2}"))?;
            }
        }
    }
    Ok("k = 2..5, q = 1..4".into())
}

fn woodall() -> Result<String, String> {
    for k in 3..=8u64 {
        for n in 1..=25u64 {
            let g = build_woodall_g0(n, k).map_err(err)?;
            let b = formulas::woodall_bound(n, k).map_err(err)?;
            ensure(BigInt::from(g.size()) == b, || format!("G0({n},{k}) has {} edges, bound {b}", g.size()))?;
            ensure(!has_cycle_geq(&g, k as usize), || format!("G0({n},{k}) has a long cycle"))?;
        }
    }
    Ok("k = 3..8, n <= 25".into())
}

/// Small deterministic pseudo-random graphs (xorshift), connected by a spanning path.
fn sample_graphs(count: usize, max_n: usize) -> Vec<Graph> {
    let mut state = 0x9E37_79B9_7F4A_7C15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    (0..count)
        .map(|_| {
            let n = 2 + (next() % (max_n as u64 - 1)) as usize;
            let mut g = Graph::path(n);
            for u in 0..n {
                for v in u + 2..n {
                    if next() % 4 == 0 {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
        .collect()
}

fn star_counts() -> Result<String, String> {
    let mut checked = 0;
    for g in sample_graphs(60, 9) {
        let d = block_decomposition(&g).map_err(err)?;
        for (i, block) in d.blocks.iter().enumerate() {
            let st = star_transform(&g, i, block[0]).map_err(err)?;
            for r in 2..=5 {
                ensure(count_cliques(&st, r) == count_cliques(&g, r), || {
                    format!("N_{r} changed for {:?}", g.edges())
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} transforms"))
}

fn certificates() -> Result<String, String> {
    let mut checked = 0;
    for g in sample_graphs(80, 10) {
        let nu = max_matching(&g);
        for s in 0..=5 {
            let cert = berge_tutte_certificate(&g, s).map_err(err)?;
            ensure(cert.is_some() == (nu <= s), || format!("s={s} on {:?}", g.edges()))?;
            if let Some(c) = cert {
                ensure(c.validate(&g, s), || format!("invalid certificate on {:?}", g.edges()))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} queries"))
}

fn oracle_values() -> Result<String, String> {
    let opts = oracle::OracleOptions { jobs: Some(1) };
    let fam = |k, s| ForbiddenFamily::new(k, s, 2).map_err(err);
    let a = oracle::brute_force_ex_with(7, &fam(None, Some(2))?, &opts).map_err(err)?.max;
    ensure(a == 11, || format!("ex(7, M3) = {a}"))?;
    let b = oracle::brute_force_ex_with(7, &fam(Some(4), Some(2))?, &opts).map_err(err)?.max;
    ensure(b == 7, || format!("ex(7, {{C>=4, M3}}) = {b}"))?;
    let c = oracle::brute_force_ex_with(6, &fam(Some(5), None)?, &opts).map_err(err)?.max;
    let w = formulas::woodall_bound(6, 5).map_err(err)?;
    ensure(BigInt::from(c) == w, || format!("ex(6, C>=5) = {c}, Woodall {w}"))?;
    Ok("3 oracle runs".into())
}
