//! Deterministic JSON reports. `serde_json` maps keep keys sorted, and all
//! scalars are written in their canonical text form.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use qgcat::category::{ExtFixTable, FixTable};
use qgcat::linalg::LinMap;
use qgcat::transforms::{Check, Verdict};

pub const ENGINE: &str = concat!("qgcat ", env!("CARGO_PKG_VERSION"));

pub fn digest(v: &Value) -> String {
    let bytes = serde_json::to_vec(v).expect("values always serialize");
    format!("sha256:{:x}", Sha256::digest(bytes))
}

/// Dimensions of every word up to the report cutoff, keyed by word text.
pub fn dims(t: &FixTable) -> Value {
    let m: Map<String, Value> = t
        .dims()
        .into_iter()
        .map(|(w, d)| (w.to_string(), json!(d)))
        .collect();
    Value::Object(m)
}

/// Table payload plus a digest of it, so derived tables can be compared
/// across runs without diffing the whole table.
pub fn table(t: &FixTable) -> Value {
    let d = dims(t);
    json!({
        "derived_digest": digest(&d),
        "dims": d,
        "semantics": t.semantics().to_string(),
    })
}

/// Nonzero spaces of an extended table with at most `squares` squares.
pub fn ext_table(g: &ExtFixTable, squares: usize) -> Value {
    let m: Map<String, Value> = g
        .entries()
        .filter(|(w, s)| w.square_count() <= squares && !s.is_zero())
        .map(|(w, s)| (w.to_string(), json!(s.dim())))
        .collect();
    let d = Value::Object(m);
    json!({
        "derived_digest": digest(&d),
        "max_squares": squares,
        "modulus": g.modulus(),
        "nonzero_dims": d,
        "semantics": g.semantics().to_string(),
    })
}

pub fn matrix(t: &LinMap) -> Value {
    let rows: Vec<Value> = (0..t.rows())
        .map(|r| {
            Value::Array(
                (0..t.cols())
                    .map(|c| Value::String(t.get(r, c).to_string()))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn check(c: &Check) -> Value {
    json!({
        "counterexample": c.counterexample,
        "holds_up_to_cutoff": c.holds,
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let clauses: Vec<Value> = v
        .clauses
        .iter()
        .map(|c| {
            json!({
                "counterexample": c.check.counterexample,
                "holds_up_to_cutoff": c.check.holds,
                "name": c.name,
            })
        })
        .collect();
    json!({
        "clauses": clauses,
        "evidence_only": v.evidence_only,
        "holds_up_to_cutoff": v.holds(),
        "theorem": v.theorem,
    })
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}
