//! Machine-readable (JSON) and aligned-text renderings.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::constructors::{BlockStarSpec, CentralBlock};
use crate::error::Result;
use crate::formulas::ExtremalValue;
use crate::graph::io::to_graph6;
use crate::graph::ForbiddenFamily;
use crate::oracle::{self, OracleResult, Parity, RegionReport};

/// An exact integer as a JSON number, without going through `f64`.
pub fn bigint_json(v: &BigInt) -> Value {
    Value::Number(
        v.to_string()
            .parse::<Number>()
            .expect("decimal integers are valid JSON numbers"),
    )
}

pub fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Odd => "odd",
        Parity::Even => "even",
    }
}

pub fn family_json(f: &ForbiddenFamily) -> Value {
    json!({
        "cycle_min_len": f.cycle_min_len,
        "matching_bound": f.matching_bound,
        "clique_order": f.clique_order,
        "describe": f.describe(),
    })
}

pub fn spec_json(spec: &BlockStarSpec) -> Value {
    let central = match spec.central() {
        CentralBlock::H(p) => json!({"kind": "H", "n": p.n, "k": p.k, "a": p.a}),
        CentralBlock::Clique(c) => json!({"kind": "K", "order": c}),
    };
    json!({
        "description": spec.to_string(),
        "central": central,
        "attached": spec.attached(),
        "order": spec.order(),
        "blocks": spec.block_count(),
        "hub": spec.hub(),
    })
}

/// `parameters` is echoed verbatim under the `"parameters"` key.
pub fn extremal_json(v: &ExtremalValue, parameters: Value) -> Value {
    let mut m = Map::new();
    m.insert("parameters".into(), parameters);
    m.insert("value".into(), bigint_json(&v.value));
    m.insert("case".into(), v.regime.name().into());
    m.insert("witness".into(), spec_json(&v.witness));
    m.insert("asymptotic_warning".into(), v.asymptotic_warning.into());
    if let Some(t) = &v.triple {
        m.insert(
            "triple".into(),
            json!({
                "family": t.family.to_string(),
                "x": t.x,
                "y": t.y,
                "z": t.z,
                "g": bigint_json(&t.g),
            }),
        );
    }
    Value::Object(m)
}

/// `{n, family, max, witnesses, examined, elapsed_ms}`; `stable` drops the timing.
pub fn oracle_json(res: &OracleResult, stable: bool) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), res.n.into());
    m.insert("family".into(), family_json(&res.family));
    m.insert("max".into(), res.max.into());
    m.insert(
        "witnesses".into(),
        res.witnesses.iter().map(to_graph6).collect::<Vec<_>>().into(),
    );
    m.insert("witnesses_truncated".into(), res.witnesses_truncated.into());
    m.insert("witness_cap".into(), oracle::WITNESS_CAP.into());
    m.insert("examined".into(), res.examined.into());
    if !stable {
        m.insert("elapsed_ms".into(), (res.elapsed.as_millis() as u64).into());
    }
    Value::Object(m)
}

pub fn region_json(rep: &RegionReport) -> Value {
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "oracle": r.oracle,
                "formula": r.formula.as_ref().map(bigint_json),
                "asymptotic_warning": r.asymptotic_warning,
                "note": r.note(),
            })
        })
        .collect();
    json!({
        "k": rep.k,
        "s": rep.s,
        "r": rep.r,
        "parity": parity_name(rep.parity),
        "family": family_json(&rep.family),
        "rows": rows,
        "agreement_from": rep.agreement_from,
    })
}

/// Right-aligned columns separated by two spaces, header first.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:>w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Formula values for `n` in `from..=to`; orders where the witness does not
/// fit show `-`.
pub fn formula_table(parity: Parity, k: u64, s: u64, r: u64, from: u64, to: u64) -> Result<String> {
    let mut rows = vec![vec![
        "n".to_string(),
        "value".to_string(),
        "case".to_string(),
        "warning".to_string(),
        "witness".to_string(),
    ]];
    for n in from..=to {
        match oracle::formula_value(parity, n, k, s, r) {
            Ok(v) => rows.push(vec![
                n.to_string(),
                v.value.to_string(),
                v.regime.name().to_string(),
                if v.asymptotic_warning { "yes" } else { "no" }.to_string(),
                v.witness.to_string(),
            ]),
            Err(crate::Error::InvalidParameter { name: "n", .. }) => rows.push(vec![
                n.to_string(),
                "-".into(),
                "-".into(),
                "-".into(),
                "witness does not fit".into(),
            ]),
            Err(e) => return Err(e),
        }
    }
    Ok(align(&rows))
}
