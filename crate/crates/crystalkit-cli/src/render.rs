//! JSON encodings shared by the commands.

use crystalkit::charalg::SocleTable;
use crystalkit::fockcrystal::MatrixNat;
use crystalkit::partitions::{Partition, PartitionPair};
use crystalkit::qwedge::{Monomial, WedgeElement};
use serde_json::{json, Value};

/// Tag carried by every JSON document.
pub const SCHEMA: &str = "crystalkit/1";

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn pair(p: &PartitionPair) -> Value {
    json!({ "plus": partition(&p.plus), "minus": partition(&p.minus) })
}

pub fn matrix_nat(m: &MatrixNat) -> Value {
    let entries: Vec<Value> = m.entries().map(|((r, c), v)| json!([r, c, v])).collect();
    json!(entries)
}

pub fn monomial(x: &Monomial, m: u32, n: u32) -> Value {
    match x.to_matrix(m, n) {
        Ok(mat) => json!(mat.rows()),
        Err(_) => json!(x.to_string()),
    }
}

pub fn wedge(x: &WedgeElement, m: u32, n: u32) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(k, c)| json!({ "monomial": monomial(k, m, n), "coeff": c.to_string() }))
        .collect();
    json!(terms)
}

pub fn socle_table(t: &SocleTable) -> Value {
    let entries: Vec<Value> = t
        .entries
        .iter()
        .map(|(p, k)| json!({ "pair": pair(p), "mult": k }))
        .collect();
    json!({ "layer": t.layer, "entries": entries })
}

/// One-line JSON with a trailing newline.
pub fn document(mut v: Value) -> String {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA));
    }
    let mut s = serde_json::to_string(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}
