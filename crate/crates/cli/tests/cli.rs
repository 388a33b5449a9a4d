use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .env_remove("TURAN_ORACLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn verify_line(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in {out}"))
        .to_string()
}

/// Builds a witness into `dir`, verifies it, and returns the verify output.
fn construct_and_verify(dir: &Path, construct: &[&str], verify: &[&str], format: &str) -> String {
    let file = dir.join(format!("w.{format}"));
    let file = file.to_str().unwrap();
    let mut args = vec!["construct"];
    args.extend_from_slice(construct);
    args.extend_from_slice(&["--format", format, "--out", file]);
    let built = turan(&args);
    assert!(built.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&built.stderr));
    let mut args = vec!["verify", "--graph", file];
    args.extend_from_slice(verify);
    let checked = turan(&args);
    assert!(checked.status.success(), "{:?}: {}", args, stdout(&checked));
    stdout(&checked)
}

#[test]
fn compute_example() {
    let j = json_of(&turan(&["compute", "--parity", "odd", "--n", "20", "--k", "2", "--s", "5", "--r", "2"]));
    assert_eq!(j["value"], 37);
    assert_eq!(j["case"], "Case1");
    assert_eq!(j["witness"]["description"], "H_{20,5,2}");
}

#[test]
fn odd_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for k in 2..=3u64 {
        for r in 2..=k + 1 {
            for s in [2 * k + 1, 3 * k + 1, 4 * k] {
                let n = 30;
                let (n_, k_, s_, r_) = (n.to_string(), k.to_string(), s.to_string(), r.to_string());
                let base = ["--n", &n_, "--k", &k_, "--s", &s_, "--r", &r_];
                let mut c = vec!["compute", "--parity", "odd"];
                c.extend_from_slice(&base);
                let value = json_of(&turan(&c))["value"].to_string();
                let mut build = vec!["--witness", "extremal-odd"];
                build.extend_from_slice(&base);
                let kc = (2 * k + 1).to_string();
                for format in ["graph6", "edgelist"] {
                    let out = construct_and_verify(dir.path(), &build, &["--k", &kc, "--s", &s_, "--r", &r_], format);
                    assert_eq!(verify_line(&out, "family-free"), "true");
                    assert_eq!(verify_line(&out, &format!("N_{r}")), value, "k={k} r={r} s={s}");
                }
            }
        }
    }
}

#[test]
fn even_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (k, r) in [(2u64, 2u64), (3, 2), (3, 3), (4, 3)] {
        for s in k - 1..=3 * k {
            if k == 2 && s == 1 {
                continue;
            }
            let n = 30;
            let (n_, k_, s_, r_) = (n.to_string(), k.to_string(), s.to_string(), r.to_string());
            let base = ["--n", &n_, "--k", &k_, "--s", &s_, "--r", &r_];
            let mut c = vec!["compute", "--parity", "even"];
            c.extend_from_slice(&base);
            let value = json_of(&turan(&c))["value"].to_string();
            let mut build = vec!["--witness", "extremal-even"];
            build.extend_from_slice(&base);
            let kc = (2 * k).to_string();
            let out = construct_and_verify(dir.path(), &build, &["--k", &kc, "--s", &s_, "--r", &r_], "graph6");
            assert_eq!(verify_line(&out, "family-free"), "true");
            assert_eq!(verify_line(&out, &format!("N_{r}")), value, "k={k} r={r} s={s}");
        }
    }
}

#[test]
fn edge_count_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    for k in 2..=4u64 {
        for q in 1..=3u64 {
            for (witness, s) in [("st1", q * (k - 1)), ("st2", q * (k - 1) + 1)] {
                if witness == "st2" && k == 2 {
                    continue;
                }
                let (k_, q_, s_) = (k.to_string(), q.to_string(), s.to_string());
                let value = json_of(&turan(&[
                    "compute", "--parity", "even", "--n", "25", "--k", &k_, "--s", &s_, "--edges-only",
                ]))["value"]
                    .to_string();
                let kc = (2 * k).to_string();
                let out = construct_and_verify(
                    dir.path(),
                    &["--witness", witness, "--n", "25", "--k", &k_, "--q", &q_],
                    &["--k", &kc, "--s", &s_],
                    "edgelist",
                );
                assert_eq!(verify_line(&out, "N_2"), value, "{witness} k={k} q={q}");
            }
        }
    }
}

#[test]
fn other_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let out = construct_and_verify(
        dir.path(),
        &["--witness", "H", "--n", "12", "--k", "5", "--a", "2"],
        &["--k", "5", "--s", "2", "--certificate"],
        "graph6",
    );
    assert_eq!(verify_line(&out, "size"), "21");
    assert_eq!(verify_line(&out, "matching number"), "2");
    assert!(verify_line(&out, "certificate").starts_with("X = [0 1]"));

    let out = construct_and_verify(dir.path(), &["--witness", "g0", "--n", "11", "--k", "5"], &["--k", "5"], "graph6");
    assert_eq!(verify_line(&out, "N_2"), "19");

    let out = construct_and_verify(
        dir.path(),
        &["--witness", "multipartite", "--n", "9", "--k", "3", "--s", "4"],
        &["--s", "4", "--r", "4"],
        "graph6",
    );
    assert_eq!(verify_line(&out, "N_4"), "0");

    let spec = dir.path().join("star.txt");
    std::fs::write(&spec, "H 7 5 2\n\n4\n3\n").unwrap();
    let out = construct_and_verify(
        dir.path(),
        &["--witness", "block-star-spec-file", "--spec", spec.to_str().unwrap()],
        &["--k", "5"],
        "edgelist",
    );
    // 11 edges of H_{7,5,2} plus K_4 and K_3.
    assert_eq!(verify_line(&out, "order"), "12");
    assert_eq!(verify_line(&out, "size"), "20");
}

#[test]
fn deterministic_construct_output() {
    let args = ["construct", "--witness", "st2", "--n", "30", "--k", "3", "--q", "2", "--format", "edgelist"];
    assert_eq!(turan(&args).stdout, turan(&args).stdout);
}

#[test]
fn oracle_example_and_stability() {
    let one = turan(&["oracle", "--n", "7", "--k", "4", "--s", "2", "--r", "2", "--jobs", "1", "--stable"]);
    let four = turan(&["oracle", "--n", "7", "--k", "4", "--s", "2", "--r", "2", "--jobs", "4", "--stable"]);
    assert_eq!(one.stdout, four.stdout);
    let j = json_of(&one);
    assert_eq!(j["max"], 7);
    assert!(j.get("elapsed_ms").is_none());
    let timed = json_of(&turan(&["oracle", "--n", "5", "--k", "4"]));
    assert!(timed.get("elapsed_ms").is_some());
}

#[test]
fn table_reports_caveat() {
    let o = turan(&["table", "--parity", "odd", "--k", "2", "--s", "5", "--n-from", "6", "--n-to", "7", "--with-oracle"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let last = text.lines().find(|l| l.trim_start().starts_with("7 ")).unwrap().to_string();
    assert!(last.contains("11") && last.contains("12") && last.contains("below asymptotic threshold"));

    let o = turan(&["table", "--parity", "even", "--k", "2", "--s", "2", "--n-from", "4", "--n-to", "6"]);
    assert!(stdout(&o).contains("witness does not fit"));
}

#[test]
fn selfcheck_passes() {
    let o = turan(&["selfcheck"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("10 of 10 checks passed"));
}

#[test]
fn exit_codes() {
    // Hypothesis violation.
    let o = turan(&["compute", "--parity", "odd", "--n", "20", "--k", "2", "--s", "3", "--r", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`s`"));
    // Not family-free.
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k5.txt");
    std::fs::write(&g, "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    let o = turan(&["verify", "--graph", g.to_str().unwrap(), "--k", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(verify_line(&stdout(&o), "family-free"), "false");
    // I/O and parse.
    assert_eq!(turan(&["verify", "--graph", "/nonexistent/file"]).status.code(), Some(2));
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 x\n").unwrap();
    assert_eq!(turan(&["verify", "--graph", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(turan(&["construct", "--witness", "H", "--n", "5"]).status.code(), Some(2));
    assert_eq!(turan(&["compute", "--parity", "odd"]).status.code(), Some(2));
    // Oracle limit.
    assert_eq!(turan(&["oracle", "--n", "8", "--k", "4"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(["oracle", "--n", "6", "--k", "4"])
        .env("TURAN_ORACLE_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(["oracle", "--n", "4"])
        .env("TURAN_ORACLE_MAX_N", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
