//! Report rendering: JSON (fixed key order, UTF-8) and CSV (header row,
//! one record per line, big integers in full decimal).
//!
//! Output is byte-deterministic for a fixed configuration: no timestamps,
//! stable orderings everywhere.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Value};

use qtrunc::identities::IdentityReport;
use qtrunc::inequalities::InequalityReport;
use qtrunc::ValueTable;

use crate::selectors::{family_params, family_token, function_token, identity_params, identity_token};

fn params_json(params: &[(&str, u32)], extra: &[(&str, usize)]) -> Value {
    let mut map = serde_json::Map::new();
    for &(name, value) in params {
        map.insert(name.to_string(), json!(value));
    }
    for &(name, value) in extra {
        map.insert(name.to_string(), json!(value));
    }
    Value::Object(map)
}

pub fn table_json(table: &ValueTable) -> Value {
    let params: Vec<(&str, u32)> = match table.id() {
        qtrunc::PartitionFunctionId::Jmr { m, r } => vec![("m", m), ("r", r)],
        _ => vec![],
    };
    let values: Vec<Value> = table
        .values()
        .iter()
        .enumerate()
        .map(|(n, v)| json!([n, v.to_string()]))
        .collect();
    json!({
        "kind": "table",
        "id": function_token(table.id()),
        "params": params_json(&params, &[("n_max", table.n_max())]),
        "status": "pass",
        "checked_up_to": table.n_max(),
        "violations": [],
        "values": values,
    })
}

pub fn table_csv(table: &ValueTable) -> String {
    let mut out = String::from("n,value\n");
    for (n, v) in table.values().iter().enumerate() {
        out.push_str(&format!("{n},{v}\n"));
    }
    out
}

pub fn identity_json(report: &IdentityReport) -> Value {
    let params = identity_params(report.id);
    let first_mismatch = report.first_mismatch.as_ref().map(|m| {
        json!({
            "power": m.power,
            "lhs": m.lhs,
            "rhs": m.rhs,
        })
    });
    json!({
        "kind": "identity",
        "id": identity_token(report.id),
        "params": params_json(&params, &[("order", report.order)]),
        "status": if report.passed() { "pass" } else { "fail" },
        "checked_up_to": report.order - 1,
        "violations": [],
        "first_mismatch": first_mismatch,
    })
}

pub fn identity_csv(report: &IdentityReport) -> String {
    let mut out = String::from("id,order,status,first_mismatch_power,lhs,rhs\n");
    match &report.first_mismatch {
        None => out.push_str(&format!("{},{},pass,,,\n", identity_token(report.id), report.order)),
        Some(m) => out.push_str(&format!(
            "{},{},fail,{},{},{}\n",
            identity_token(report.id),
            report.order,
            m.power,
            m.lhs,
            m.rhs
        )),
    }
    out
}

pub fn scan_json(report: &InequalityReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({"k": v.k, "n": v.n, "value": v.value.to_string()}))
        .collect();
    let strictness: Vec<Value> = report
        .strictness_violations
        .iter()
        .map(|&(k, n)| json!({"k": k, "n": n}))
        .collect();
    let thresholds: Vec<Value> = (1..=report.k_max)
        .filter_map(|k| report.family.threshold(k).map(|t| json!([k, t])))
        .collect();
    json!({
        "kind": "scan",
        "family": family_token(report.family),
        "params": params_json(
            &family_params(report.family),
            &[("k_max", report.k_max as usize), ("n_max", report.n_max)],
        ),
        "status": if report.passed() { "pass" } else { "fail" },
        "conjectural": report.conjectural,
        "checked_up_to": report.n_max,
        "violations": violations,
        "strictness_violations": strictness,
        "thresholds": thresholds,
    })
}

pub fn scan_csv(report: &InequalityReport) -> String {
    let mut out = String::from("family,kind,k,n,value\n");
    let token = family_token(report.family);
    for v in &report.violations {
        out.push_str(&format!("{token},violation,{},{},{}\n", v.k, v.n, v.value));
    }
    for &(k, n) in &report.strictness_violations {
        out.push_str(&format!("{token},strictness,{k},{n},\n"));
    }
    out
}

/// Write to the given path, or standard output when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

pub fn json_to_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializing a report cannot fail");
    s.push('\n');
    s
}
