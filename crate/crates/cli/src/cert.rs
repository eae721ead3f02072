//! Certificates and the JSON encoding of exact values.
//!
//! Exact values are written as arrays of integer or fraction strings with a
//! display string alongside. The hash is SHA-256 over the compact encoding
//! of every field except the hash itself; object keys are sorted, so the
//! bytes depend only on the content.

use hurwitz_core::residue::{Mat2, ResidueRing};
use hurwitz_core::{FieldElem, IdealK, QuatElem, Real};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = concat!("hurwitz ", env!("CARGO_PKG_VERSION"));

pub fn field_json(x: &FieldElem) -> Value {
    let coeffs: Vec<String> = x.coeffs().iter().map(|c| c.to_string()).collect();
    json!({ "coeffs": coeffs, "display": x.to_string() })
}

pub fn quat_json(q: &QuatElem) -> Value {
    let coords: Vec<Vec<String>> = q
        .coords()
        .iter()
        .map(|c| c.coeffs().iter().map(|r| r.to_string()).collect())
        .collect();
    json!({ "coords": coords, "display": q.to_string() })
}

pub fn ideal_json(i: &IdealK) -> Value {
    json!({ "generator": field_json(i.generator()), "norm": i.norm().to_string(), "display": i.to_string() })
}

pub fn mat_json(r: &ResidueRing, m: &Mat2) -> Value {
    let entries: Vec<Vec<String>> =
        m.0.iter()
            .map(|e| e.0.iter().map(|c| c.to_string()).collect())
            .collect();
    json!({ "entries": entries, "display": m.display(r) })
}

pub fn field_matrix_json(m: &[Vec<FieldElem>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(field_json).collect()))
            .collect(),
    )
}

/// A real number at a stated precision, with an f64 convenience copy.
pub fn real_json(x: &Real, digits: u32) -> Value {
    json!({ "decimal": x.to_decimal(digits), "digits": digits, "approx": x.to_f64() })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub group: String,
    pub passed: bool,
    pub witness: String,
}

impl Check {
    pub fn new(group: &str, name: &str, passed: bool, witness: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            group: group.to_string(),
            passed,
            witness: witness.into(),
        }
    }

    fn to_json(&self) -> Value {
        json!({ "name": self.name, "group": self.group, "passed": self.passed, "witness": self.witness })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn new(command: &str) -> Self {
        Certificate {
            command: command.to_string(),
            inputs: Map::new(),
            outputs: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, c: Check) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn payload(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "all_passed": self.all_passed(),
            "tool_version": TOOL_VERSION,
        })
    }

    pub fn hash(&self) -> String {
        let bytes = serde_json::to_vec(&self.payload()).expect("json values serialize");
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.payload();
        v["sha256"] = Value::String(self.hash());
        v
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json values serialize")
    }

    /// Plain-text rendering: outputs, then one line per check.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  input  {k}: {}\n", short(v)));
        }
        for (k, v) in &self.outputs {
            out.push_str(&format!("  {k}: {}\n", short(v)));
        }
        if !self.checks.is_empty() {
            let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &self.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                out.push_str(&format!("  [{mark}] {:width$}  {}\n", c.name, c.witness));
            }
            let passed = self.checks.iter().filter(|c| c.passed).count();
            out.push_str(&format!("  {passed}/{} checks passed\n", self.checks.len()));
        }
        out.push_str(&format!("  sha256 {}\n", self.hash()));
        out
    }
}

/// Display strings where present, compact JSON otherwise.
fn short(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => match (m.get("display"), m.get("decimal")) {
            (Some(Value::String(s)), _) => s.clone(),
            (_, Some(Value::String(s))) => s.clone(),
            _ => v.to_string(),
        },
        Value::Array(a) if a.iter().all(|x| x.get("display").is_some()) => {
            let parts: Vec<String> = a.iter().map(short).collect();
            format!("[{}]", parts.join(", "))
        }
        _ => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_ignores_nothing_but_itself() {
        let mut a = Certificate::new("demo");
        a.input("x", "1").output("y", field_json(&FieldElem::eta()));
        a.check(Check::new("field", "demo", true, "w"));
        let b = a.clone();
        assert_eq!(a.hash(), b.hash());
        assert_eq!(a.to_json()["sha256"], Value::String(a.hash()));
        let mut c = a.clone();
        c.checks[0].passed = false;
        assert_ne!(a.hash(), c.hash());
        assert!(!c.all_passed());
        assert!(a.to_text().contains("1/1 checks passed"));
    }

    #[test]
    fn exact_values_are_strings() {
        let v = field_json(&FieldElem::from_fraction(-3, 7));
        assert_eq!(v["coeffs"], json!(["-3/7", "0", "0"]));
        let q = quat_json(&QuatElem::j_prime());
        assert_eq!(q["coords"][0], json!(["1/2", "0", "0"]));
    }
}
