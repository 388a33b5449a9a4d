use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use turan_core::constructors::{self, BlockStarSpec, HGraphParams};
use turan_core::formulas::{self, ExtremalValue};
use turan_core::graph::io::{parse_graph, to_edge_list, to_graph6};
use turan_core::graph::{berge_tutte_certificate, count_cliques, is_family_free, Violation, CERTIFICATE_MAX_ORDER};
use turan_core::oracle::{self, OracleOptions, Parity};
use turan_core::report;
use turan_core::selfcheck::run_selfcheck;
use turan_core::{Error, ForbiddenFamily, Graph};

use crate::{ComputeArgs, ConstructArgs, FormatArg, OracleArgs, ParityArg, TableArgs, VerifyArgs, WitnessArg};

pub const EXIT_CONSTRAINT: u8 = 1;
pub const EXIT_IO: u8 = 2;
pub const EXIT_ORACLE_LIMIT: u8 = 3;

pub const ORACLE_ENV: &str = "TURAN_ORACLE_MAX_N";
pub const DEFAULT_ORACLE_MAX_N: usize = 7;
const MAX_TABLE_ROWS: u64 = 100_000;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn constraint(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_CONSTRAINT,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_IO,
            _ => EXIT_CONSTRAINT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, CliError>;

fn parity(p: ParityArg) -> Parity {
    match p {
        ParityArg::Odd => Parity::Odd,
        ParityArg::Even => Parity::Even,
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn need<T: Copy>(v: Option<T>, flag: &str, witness: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::usage(format!("--{flag} is required for --witness {witness}")))
}

/// Resolves the `r` of `compute`: `--edges-only` pins it to 2.
fn compute_r(args: &ComputeArgs) -> Result<u64, CliError> {
    match (args.edges_only, args.r) {
        (true, None) | (true, Some(2)) => Ok(2),
        (true, Some(r)) => Err(CliError::constraint(format!("--edges-only counts edges, so --r must be 2 (got {r})"))),
        (false, Some(r)) => Ok(r),
        (false, None) => Err(CliError::usage("--r is required unless --edges-only is given")),
    }
}

pub fn compute(args: &ComputeArgs) -> CmdResult {
    let r = compute_r(args)?;
    let (n, k, s) = (args.n, args.k, args.s);
    let value: ExtremalValue = match args.parity {
        ParityArg::Odd => formulas::ex_odd(n, k, s, r)?,
        ParityArg::Even if args.edges_only || (r == 2 && k == 2) => formulas::ex_even_edges(n, k, s)?,
        ParityArg::Even => formulas::ex_even(n, k, s, r)?,
    };
    let p = parity(args.parity);
    let params = json!({
        "parity": report::parity_name(p),
        "n": n,
        "k": k,
        "s": s,
        "r": r,
        "cycle_threshold": p.cycle_threshold(k),
        "edges_only": args.edges_only,
    });
    print_json(&report::extremal_json(&value, params));
    Ok(0)
}

fn build_witness(args: &ConstructArgs) -> Result<Graph, CliError> {
    let name = match args.witness {
        WitnessArg::H => "H",
        WitnessArg::ExtremalOdd => "extremal-odd",
        WitnessArg::ExtremalEven => "extremal-even",
        WitnessArg::St1 => "st1",
        WitnessArg::St2 => "st2",
        WitnessArg::G0 => "g0",
        WitnessArg::Multipartite => "multipartite",
        WitnessArg::BlockStarSpecFile => "block-star-spec-file",
    };
    let n = || need(args.n, "n", name);
    let k = || need(args.k, "k", name);
    let g = match args.witness {
        WitnessArg::H => constructors::build_h(HGraphParams::new(n()?, k()?, need(args.a, "a", name)?)?)?,
        WitnessArg::ExtremalOdd | WitnessArg::ExtremalEven => {
            let (n, k) = (n()?, k()?);
            let s = need(args.s, "s", name)?;
            let r = need(args.r, "r", name)?;
            if args.witness == WitnessArg::ExtremalOdd {
                constructors::build_extremal_odd(n, k, s, r)?
            } else {
                constructors::build_extremal_even(n, k, s, r)?
            }
        }
        WitnessArg::St1 => constructors::build_st1(n()?, k()?, need(args.q, "q", name)?)?,
        WitnessArg::St2 => constructors::build_st2(n()?, k()?, need(args.q, "q", name)?)?,
        WitnessArg::G0 => constructors::build_woodall_g0(n()?, k()?)?,
        WitnessArg::Multipartite => constructors::build_multipartite_g(n()?, k()?, need(args.s, "s", name)?)?,
        WitnessArg::BlockStarSpecFile => {
            let path = args
                .spec
                .as_deref()
                .ok_or_else(|| CliError::usage("--spec is required for --witness block-star-spec-file"))?;
            let spec = BlockStarSpec::parse(&read_file(path)?)?;
            constructors::build_block_star(&spec)?
        }
    };
    Ok(g)
}

pub fn construct(args: &ConstructArgs) -> CmdResult {
    let g = build_witness(args)?;
    let mut text = match args.format {
        FormatArg::Graph6 => to_graph6(&g),
        FormatArg::Edgelist => to_edge_list(&g),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &args.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::LongCycle { min_len, cycle } => format!(
            "cycle of length {} (>= {min_len}): {}",
            cycle.len(),
            join(cycle.iter())
        ),
        Violation::LargeMatching { bound, edges } => format!(
            "{} disjoint edges (> {bound}): {}",
            edges.len(),
            edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
        ),
    }
}

fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::LongCycle { min_len, cycle } => json!({"kind": "long_cycle", "min_len": min_len, "cycle": cycle}),
        Violation::LargeMatching { bound, edges } => {
            json!({"kind": "large_matching", "bound": bound, "edges": edges})
        }
    }
}

fn join<T: ToString>(items: impl Iterator<Item = T>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let g = parse_graph(&read_file(&args.graph)?)?;
    let fam = ForbiddenFamily::new(args.k, args.s, args.r)?;
    let rep = is_family_free(&g, &fam);
    let cliques = count_cliques(&g, args.r);

    enum Cert {
        NotRequested,
        NoBound,
        TooLarge,
        Exceeded,
        Found(turan_core::graph::BergeTutteCertificate),
    }
    let cert = match (args.certificate, args.s) {
        (false, _) => Cert::NotRequested,
        (true, None) => Cert::NoBound,
        (true, Some(_)) if g.order() > CERTIFICATE_MAX_ORDER => Cert::TooLarge,
        (true, Some(s)) => match berge_tutte_certificate(&g, s)? {
            Some(c) => Cert::Found(c),
            None => Cert::Exceeded,
        },
    };

    if args.json {
        let cert_json = match &cert {
            Cert::Found(c) => json!({"x": c.x, "component_sizes": c.component_sizes(), "slack": c.slack}),
            Cert::NotRequested => Value::Null,
            Cert::NoBound => json!("no matching bound given"),
            Cert::TooLarge => json!(format!("skipped: order exceeds {CERTIFICATE_MAX_ORDER}")),
            Cert::Exceeded => json!("none: matching number exceeds s"),
        };
        print_json(&json!({
            "order": g.order(),
            "size": g.size(),
            "family": report::family_json(&fam),
            "family_free": rep.is_free(),
            "violations": rep.violations.iter().map(violation_json).collect::<Vec<_>>(),
            "matching_number": rep.matching_number,
            "clique_order": args.r,
            "clique_count": cliques,
            "certificate": cert_json,
        }));
    } else {
        println!("order: {}", g.order());
        println!("size: {}", g.size());
        println!("family: {}", fam.describe());
        println!("family-free: {}", rep.is_free());
        for v in &rep.violations {
            println!("violation: {}", violation_text(v));
        }
        if let Some(m) = rep.matching_number {
            println!("matching number: {m}");
        }
        println!("N_{}: {cliques}", args.r);
        match &cert {
            Cert::NotRequested => {}
            Cert::NoBound => println!("certificate: needs --s"),
            Cert::TooLarge => println!("certificate: skipped (order exceeds {CERTIFICATE_MAX_ORDER})"),
            Cert::Exceeded => println!("certificate: none (matching number exceeds s)"),
            Cert::Found(c) => println!(
                "certificate: X = [{}]; component sizes [{}]; slack {}",
                join(c.x.iter()),
                join(c.component_sizes().iter()),
                c.slack
            ),
        }
    }
    Ok(if rep.is_free() { 0 } else { EXIT_CONSTRAINT })
}

/// The oracle order cap from the environment.
fn oracle_cap() -> Result<usize, CliError> {
    match std::env::var(ORACLE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{ORACLE_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_MAX_N),
    }
}

fn check_oracle_order(n: usize) -> Result<(), CliError> {
    let cap = oracle_cap()?.min(oracle::ORACLE_MAX_N);
    if n > cap {
        return Err(CliError {
            code: EXIT_ORACLE_LIMIT,
            message: format!("oracle order {n} exceeds the limit {cap} (set {ORACLE_ENV}, at most {})", oracle::ORACLE_MAX_N),
        });
    }
    Ok(())
}

pub fn oracle(args: &OracleArgs) -> CmdResult {
    let fam = ForbiddenFamily::new(args.k, args.s, args.r)?;
    check_oracle_order(args.n)?;
    let opts = OracleOptions { jobs: args.jobs };
    let res = oracle::brute_force_ex_with(args.n, &fam, &opts)?;
    print_json(&report::oracle_json(&res, args.stable));
    Ok(0)
}

pub fn table(args: &TableArgs) -> CmdResult {
    if args.n_from > args.n_to {
        return Err(CliError::constraint(format!(
            "--n-from {} exceeds --n-to {}",
            args.n_from, args.n_to
        )));
    }
    if args.n_to - args.n_from >= MAX_TABLE_ROWS {
        return Err(CliError::constraint(format!("at most {MAX_TABLE_ROWS} rows")));
    }
    let p = parity(args.parity);
    if !args.with_oracle {
        print!(
            "{}",
            report::formula_table(p, args.k, args.s, args.r, args.n_from, args.n_to)?
        );
        return Ok(0);
    }
    check_oracle_order(args.n_to as usize)?;
    let opts = OracleOptions { jobs: args.jobs };
    let rep = oracle::verify_formula_region(args.k, args.s, args.r, p, args.n_from..=args.n_to, &opts)?;
    let mut rows = vec![["n", "formula", "oracle", "warning", "note"].map(String::from).to_vec()];
    for row in &rep.rows {
        rows.push(vec![
            row.n.to_string(),
            row.formula.as_ref().map_or("-".into(), ToString::to_string),
            row.oracle.to_string(),
            if row.asymptotic_warning { "yes" } else { "no" }.into(),
            row.note(),
        ]);
    }
    print!("{}", report::align(&rows));
    match rep.agreement_from {
        Some(n) => println!("agreement from n = {n}"),
        None => println!("no agreement at the top of the range"),
    }
    Ok(0)
}

pub fn selfcheck() -> CmdResult {
    let outcomes = run_selfcheck();
    for o in &outcomes {
        println!("{} {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} of {} checks passed", outcomes.len() - failed, outcomes.len());
    Ok(if failed == 0 { 0 } else { EXIT_CONSTRAINT })
}
