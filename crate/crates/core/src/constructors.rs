//! Concrete extremal witness graphs.
//!
//! Labeling is fixed so that equal specs give byte-identical graphs: the
//! central block comes first (dominators `0..a`, the rest of its clique, then
//! pendants), followed by the attached cliques in non-increasing order. The
//! hub shared by every block is vertex 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;

/// Largest order any builder will materialize.
pub const MAX_BUILD_ORDER: u64 = 20_000;

/// Parameters of `H_{n,k,a}`: `K_{k-a}` plus `n-(k-a)` vertices each joined
/// to the same `a` clique vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HGraphParams {
    pub n: u64,
    pub k: u64,
    pub a: u64,
}

impl HGraphParams {
    pub fn new(n: u64, k: u64, a: u64) -> Result<Self> {
        if a < 1 {
            return Err(Error::param("a", "must be >= 1"));
        }
        if k < 2 * a {
            return Err(Error::param("k", format!("need k >= 2a = {}", 2 * a)));
        }
        if n < k - a {
            return Err(Error::param("n", format!("need n >= k - a = {}", k - a)));
        }
        Ok(HGraphParams { n, k, a })
    }

    /// Order of the clique part.
    pub fn clique_order(&self) -> u64 {
        self.k - self.a
    }
}

impl fmt::Display for HGraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{{{},{},{}}}", self.n, self.k, self.a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CentralBlock {
    H(HGraphParams),
    Clique(u64),
}

impl CentralBlock {
    pub fn order(&self) -> u64 {
        match self {
            CentralBlock::H(p) => p.n,
            CentralBlock::Clique(c) => *c,
        }
    }
}

impl fmt::Display for CentralBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralBlock::H(p) => p.fmt(f),
            CentralBlock::Clique(c) => write!(f, "K_{c}"),
        }
    }
}

/// A central block with cliques glued at its hub.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockStarSpec {
    central: CentralBlock,
    /// Attached clique orders, non-increasing.
    attached: Vec<u64>,
}

impl BlockStarSpec {
    pub fn new(central: CentralBlock, mut attached: Vec<u64>) -> Result<Self> {
        match central {
            CentralBlock::H(p) => {
                HGraphParams::new(p.n, p.k, p.a)?;
            }
            CentralBlock::Clique(c) if c < 1 => {
                return Err(Error::param("central", "clique order must be >= 1"));
            }
            CentralBlock::Clique(_) => {}
        }
        if let Some(&c) = attached.iter().find(|&&c| c < 2) {
            return Err(Error::param(
                "attached",
                format!("clique orders must be >= 2, got {c}"),
            ));
        }
        attached.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BlockStarSpec { central, attached })
    }

    /// Central `H_{m,k,a}` with `m` chosen so the total order is `n`.
    ///
    /// The central block must keep at least `k` vertices, i.e. at least `a`
    /// pendants, so that its hub lies in every maximum matching.
    pub fn h_star(n: u64, k: u64, a: u64, attached: Vec<u64>) -> Result<Self> {
        let extra: u64 = attached.iter().map(|c| c.saturating_sub(1)).sum();
        let min = k + extra;
        if n < min {
            return Err(Error::param(
                "n",
                format!("the witness needs at least {min} vertices, got n = {n}"),
            ));
        }
        Self::new(CentralBlock::H(HGraphParams::new(n - extra, k, a)?), attached)
    }

    /// `St^1(n, 2k, q)`: `H_{n-(q-1)(2k-2), 2k-1, k-1}` plus `q-1` copies of `K_{2k-1}`.
    pub fn st1(n: u64, k: u64, q: u64) -> Result<Self> {
        Self::st(n, k, q, 2 * k - 1)
    }

    /// `St^2(n, 2k, q)`: as `St^1` with central block `H_{·, 2k, k-1}`.
    pub fn st2(n: u64, k: u64, q: u64) -> Result<Self> {
        Self::st(n, k, q, 2 * k)
    }

    fn st(n: u64, k: u64, q: u64, central_k: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::param("k", "must be >= 2"));
        }
        if q < 1 {
            return Err(Error::param("q", "must be >= 1"));
        }
        Self::h_star(n, central_k, k - 1, vec![2 * k - 1; (q - 1) as usize])
    }

    pub fn central(&self) -> &CentralBlock {
        &self.central
    }

    pub fn attached(&self) -> &[u64] {
        &self.attached
    }

    pub fn order(&self) -> u64 {
        self.central.order() + self.attached.iter().map(|c| c - 1).sum::<u64>()
    }

    /// Smallest total order for which [`BlockStarSpec::h_star`] accepts this shape.
    pub fn min_order(&self) -> u64 {
        let base = match self.central {
            CentralBlock::H(p) => p.k,
            CentralBlock::Clique(c) => c,
        };
        base + self.attached.iter().map(|c| c - 1).sum::<u64>()
    }

    /// Number of blocks once rendered (a `K_1` or `K_2` central block counts as one).
    pub fn block_count(&self) -> usize {
        1 + self.attached.len()
    }

    /// The shared cut vertex.
    pub fn hub(&self) -> usize {
        0
    }

    /// The line format: central block first, one attached order per line.
    pub fn to_spec_string(&self) -> String {
        let mut out = match self.central {
            CentralBlock::H(p) => format!("H {} {} {}\n", p.n, p.k, p.a),
            CentralBlock::Clique(c) => format!("K {c}\n"),
        };
        for c in &self.attached {
            out.push_str(&format!("{c}\n"));
        }
        out
    }

    /// Parses [`BlockStarSpec::to_spec_string`] output. Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_no, first) = lines
            .next()
            .ok_or_else(|| perr(1, "empty block-star spec".into()))?;
        let num = |line: usize, tok: &str| -> Result<u64> {
            tok.parse::<u64>()
                .map_err(|e| perr(line, format!("bad integer {tok:?}: {e}")))
        };
        let toks: Vec<&str> = first.split_whitespace().collect();
        let central = match toks.as_slice() {
            ["H", n, k, a] => {
                let p = (num(first_no, n)?, num(first_no, k)?, num(first_no, a)?);
                CentralBlock::H(HGraphParams { n: p.0, k: p.1, a: p.2 })
            }
            ["K", c] => CentralBlock::Clique(num(first_no, c)?),
            _ => {
                return Err(perr(
                    first_no,
                    format!("expected \"H n k a\" or \"K c\", found {first:?}"),
                ))
            }
        };
        let mut attached = Vec::new();
        for (no, line) in lines {
            attached.push(num(no, line)?);
        }
        Self::new(central, attached)
    }
}

impl fmt::Display for BlockStarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.central)?;
        let mut i = 0;
        while i < self.attached.len() {
            let c = self.attached[i];
            let run = self.attached[i..].iter().take_while(|&&x| x == c).count();
            if run == 1 {
                write!(f, " + K_{c}")?;
            } else {
                write!(f, " + {run}K_{c}")?;
            }
            i += run;
        }
        Ok(())
    }
}

fn check_size(n: u64) -> Result<usize> {
    if n > MAX_BUILD_ORDER {
        return Err(Error::SizeLimit {
            what: "graph order",
            size: n as usize,
            limit: MAX_BUILD_ORDER as usize,
        });
    }
    Ok(n as usize)
}

fn add_clique(g: &mut Graph, vertices: &[usize]) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            g.add_edge(u, v);
        }
    }
}

/// `H_{n,k,a}` with dominators `0..a`, the rest of the clique `a..k-a`, pendants after.
pub fn build_h(params: HGraphParams) -> Result<Graph> {
    let p = HGraphParams::new(params.n, params.k, params.a)?;
    let n = check_size(p.n)?;
    let (c, a) = (p.clique_order() as usize, p.a as usize);
    let mut g = Graph::new(n);
    add_clique(&mut g, &(0..c).collect::<Vec<_>>());
    for v in c..n {
        for d in 0..a {
            g.add_edge(v, d);
        }
    }
    Ok(g)
}

pub fn build_block_star(spec: &BlockStarSpec) -> Result<Graph> {
    let total = check_size(spec.order())?;
    let mut g = Graph::new(total);
    let mut next = match spec.central {
        CentralBlock::H(p) => {
            let h = build_h(p)?;
            for (u, v) in h.edges() {
                g.add_edge(u, v);
            }
            h.order()
        }
        CentralBlock::Clique(c) => {
            add_clique(&mut g, &(0..c as usize).collect::<Vec<_>>());
            c as usize
        }
    };
    for &c in &spec.attached {
        let mut members = vec![spec.hub()];
        members.extend(next..next + c as usize - 1);
        add_clique(&mut g, &members);
        next += c as usize - 1;
    }
    debug_assert_eq!(next, total);
    Ok(g)
}

/// The odd-cycle extremal graph for the case selected by `τ_{k,r}`.
pub fn build_extremal_odd(n: u64, k: u64, s: u64, r: u64) -> Result<Graph> {
    build_block_star(&formulas::ex_odd(n, k, s, r)?.witness)
}

/// The even-cycle witness for the optimizer's argmax, or `St^1`/`St^2` when `r = 2`
/// and `k = 2`.
pub fn build_extremal_even(n: u64, k: u64, s: u64, r: u64) -> Result<Graph> {
    let value = if k == 2 && r == 2 {
        formulas::ex_even_edges(n, k, s)?
    } else {
        formulas::ex_even(n, k, s, r)?
    };
    build_block_star(&value.witness)
}

pub fn build_st1(n: u64, k: u64, q: u64) -> Result<Graph> {
    build_block_star(&BlockStarSpec::st1(n, k, q)?)
}

pub fn build_st2(n: u64, k: u64, q: u64) -> Result<Graph> {
    build_block_star(&BlockStarSpec::st2(n, k, q)?)
}

/// Woodall's `G_0`: `q` copies of `K_{k-1}` and one `K_{p+1}` sharing a vertex.
pub fn woodall_g0_spec(n: u64, k: u64) -> Result<BlockStarSpec> {
    let (q, p) = formulas::woodall_decomposition(n, k)?;
    if q == 0 {
        return BlockStarSpec::new(CentralBlock::Clique(p + 1), Vec::new());
    }
    let mut attached = vec![k - 1; (q - 1) as usize];
    if p >= 1 {
        attached.push(p + 1);
    }
    BlockStarSpec::new(CentralBlock::Clique(k - 1), attached)
}

pub fn build_woodall_g0(n: u64, k: u64) -> Result<Graph> {
    build_block_star(&woodall_g0_spec(n, k)?)
}

/// Class sizes of `G(n, k, s)`: `n - s`, then `s` split into `k - 1` near-equal parts.
pub fn multipartite_classes(n: u64, k: u64, s: u64) -> Result<Vec<u64>> {
    if k < 2 {
        return Err(Error::param("k", "must be >= 2"));
    }
    if s < k - 1 {
        return Err(Error::param("s", format!("need s >= k - 1 = {}", k - 1)));
    }
    if n <= s {
        return Err(Error::param("n", format!("need n > s = {s}")));
    }
    let parts = k - 1;
    let mut sizes = vec![n - s];
    sizes.extend((0..parts).map(|i| s / parts + u64::from(i < s % parts)));
    Ok(sizes)
}

/// The complete `k`-partite graph `G(n, k, s)`, classes labeled consecutively.
pub fn build_multipartite_g(n: u64, k: u64, s: u64) -> Result<Graph> {
    let sizes = multipartite_classes(n, k, s)?;
    let total = check_size(n)?;
    let mut class = Vec::with_capacity(total);
    for (i, &c) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat_n(i, c as usize));
    }
    let mut g = Graph::new(total);
    for u in 0..total {
        for v in u + 1..total {
            if class[u] != class[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        block_decomposition, count_cliques, has_cycle_geq, io, max_matching,
    };

    fn h(n: u64, k: u64, a: u64) -> Graph {
        build_h(HGraphParams::new(n, k, a).unwrap()).unwrap()
    }

    #[test]
    fn small_h() {
        let g = h(5, 5, 2);
        assert_eq!(g.size(), 7);
        assert!(g.has_edge(3, 0) && g.has_edge(3, 1) && !g.has_edge(3, 2));
        assert!(g.has_edge(4, 0) && g.has_edge(4, 1) && !g.has_edge(3, 4));
        assert_eq!(max_matching(&h(12, 7, 3)), 3);
        assert_eq!(count_cliques(&h(8, 7, 3), 3), 16);
    }

    #[test]
    fn h_params_rejected() {
        assert!(matches!(HGraphParams::new(5, 3, 2), Err(Error::InvalidParameter { name: "k", .. })));
        assert!(matches!(HGraphParams::new(2, 7, 3), Err(Error::InvalidParameter { name: "n", .. })));
        assert!(HGraphParams::new(5, 5, 0).is_err());
    }

    #[test]
    fn h_edges_match_f2() {
        for k in 2..=9 {
            for a in 1..=k / 2 {
                for n in k - a..20 {
                    let e = h(n, k, a).size() as i64;
                    assert_eq!(formulas::f_value(n, k, a, 2).unwrap(), e.into());
                }
            }
        }
    }

    #[test]
    fn empty_attachment_is_build_h() {
        let spec = BlockStarSpec::h_star(9, 7, 3, vec![]).unwrap();
        assert_eq!(build_block_star(&spec).unwrap(), h(9, 7, 3));
    }

    #[test]
    fn block_star_structure() {
        let spec = BlockStarSpec::h_star(40, 7, 3, vec![6, 6]).unwrap();
        let g = build_block_star(&spec).unwrap();
        assert_eq!(g.order(), 40);
        assert_eq!(max_matching(&g), 7);
        assert!(!has_cycle_geq(&g, 7));
        let d = block_decomposition(&g).unwrap();
        assert_eq!(d.block_orders(), vec![30, 6, 6]);
        assert_eq!(d.cut_vertices, vec![0]);

        let spec = BlockStarSpec::h_star(40, 7, 3, vec![6, 6, 4]).unwrap();
        let g = build_block_star(&spec).unwrap();
        // k + q(k-1) + t with k = 3, q = 2, t = 1.
        assert_eq!(max_matching(&g), 8);
    }

    #[test]
    fn attached_sorted_and_rendered() {
        let spec = BlockStarSpec::new(CentralBlock::Clique(3), vec![2, 5, 5]).unwrap();
        assert_eq!(spec.attached(), &[5, 5, 2]);
        assert_eq!(spec.to_string(), "K_3 + 2K_5 + K_2");
        assert_eq!(spec.order(), 3 + 4 + 4 + 1);
        assert!(BlockStarSpec::new(CentralBlock::Clique(3), vec![1]).is_err());
    }

    #[test]
    fn spec_file_round_trip() {
        let spec = BlockStarSpec::h_star(30, 7, 3, vec![6, 4]).unwrap();
        let text = spec.to_spec_string();
        assert_eq!(text, "H 22 7 3\n6\n4\n");
        assert_eq!(BlockStarSpec::parse(&text).unwrap(), spec);
        assert_eq!(
            BlockStarSpec::parse("\nK 4\n\n3\n").unwrap(),
            BlockStarSpec::new(CentralBlock::Clique(4), vec![3]).unwrap()
        );
        assert!(matches!(BlockStarSpec::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(BlockStarSpec::parse("X 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(BlockStarSpec::parse("K 3\nfoo\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            BlockStarSpec::parse("H 4 3 2\n"),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn deterministic_serialization() {
        let a = build_extremal_odd(30, 3, 12, 3).unwrap();
        let b = build_extremal_odd(30, 3, 12, 3).unwrap();
        assert_eq!(io::to_graph6(&a), io::to_graph6(&b));
        assert_eq!(io::to_edge_list(&a), io::to_edge_list(&b));
    }

    #[test]
    fn st_graphs() {
        for k in 2..=5u64 {
            for q in 1..=4u64 {
                let n = 2 * k + (q - 1) * (2 * k - 2) + 3;
                let g1 = build_st1(n, k, q).unwrap();
                let g2 = build_st2(n, k, q).unwrap();
                assert_eq!(g1.order() as u64, n);
                assert_eq!(g2.size(), g1.size() + 1);
                assert_eq!(max_matching(&g1) as u64, q * (k - 1));
                assert_eq!(max_matching(&g2) as u64, q * (k - 1) + 1);
            }
        }
        assert_eq!(max_matching(&build_st1(20, 2, 3).unwrap()), 3);
        assert!(build_st1(10, 2, 0).is_err());
        assert!(build_st1(4, 2, 2).is_err());
    }

    #[test]
    fn woodall_g0() {
        let g = build_woodall_g0(7, 5).unwrap();
        assert_eq!(g.size(), 12);
        assert_eq!(block_decomposition(&g).unwrap().block_orders(), vec![4, 4]);
        for k in 3..=8u64 {
            assert_eq!(build_woodall_g0(k - 1, k).unwrap(), Graph::complete(k as usize - 1));
            for n in 1..=20 {
                let g = build_woodall_g0(n, k).unwrap();
                assert_eq!(g.order() as u64, n);
                assert_eq!(formulas::woodall_bound(n, k).unwrap(), (g.size() as i64).into());
                assert!(!has_cycle_geq(&g, k as usize));
            }
        }
    }

    #[test]
    fn multipartite() {
        let g = build_multipartite_g(10, 2, 3).unwrap();
        assert_eq!(g.size(), 21);
        assert_eq!(multipartite_classes(20, 4, 7).unwrap(), vec![13, 3, 2, 2]);
        for k in 2..=5u64 {
            for s in k - 1..=6 {
                for n in 2 * s..2 * s + 4 {
                    let g = build_multipartite_g(n, k, s).unwrap();
                    assert_eq!(max_matching(&g) as u64, s);
                    assert_eq!(count_cliques(&g, k as usize + 1), 0);
                }
            }
        }
        assert!(build_multipartite_g(3, 2, 3).is_err());
        assert!(build_multipartite_g(10, 4, 2).is_err());
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            build_h(HGraphParams::new(1_000_000, 5, 2).unwrap()),
            Err(Error::SizeLimit { .. })
        ));
    }
}
