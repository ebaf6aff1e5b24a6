//! Structured command reports.
//!
//! A report is deterministic for identical inputs; the only varying part is
//! `meta`, which `--no-meta` drops. Rationals are always `"p/q"` strings.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

/// Stable process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Verification = 2,
    Assumption = 3,
    Conference = 4,
    LiftPrecondition = 5,
    Budget = 6,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// A failed command: exit code, message and optional remedy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
    pub hint: Option<String>,
}

impl Failure {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
            hint: None,
        }
    }

    pub fn with_hint(mut self, hint: impl Into<String>) -> Self {
        self.hint = Some(hint.into());
        self
    }
}

/// Provenance labels attached to reported values.
pub const COMPUTED_EXACT: &str = "computed-exact";
pub const COMPUTED_BOUND: &str = "computed-bound";
pub const CITED: &str = "cited";

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub input_digest: String,
    pub results: Map<String, Value>,
    pub provenance: Map<String, Value>,
    pub failure: Option<Failure>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            input_digest: String::new(),
            results: Map::new(),
            provenance: Map::new(),
            failure: None,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn label(&mut self, key: &str, label: &str) {
        self.provenance.insert(key.to_string(), label.into());
    }

    pub fn exit_code(&self) -> ExitCode {
        self.failure.as_ref().map_or(ExitCode::Success, |f| f.code)
    }

    pub fn to_value(&self, meta: Option<Value>) -> Value {
        let mut out = Map::new();
        out.insert("schema_version".into(), SCHEMA_VERSION.into());
        out.insert("command".into(), self.command.into());
        out.insert("input_digest".into(), self.input_digest.clone().into());
        out.insert(
            "status".into(),
            if self.failure.is_some() { "error" } else { "ok" }.into(),
        );
        out.insert("exit_code".into(), self.exit_code().code().into());
        if let Some(f) = &self.failure {
            let mut e = json!({ "message": f.message });
            if let Some(h) = &f.hint {
                e["hint"] = h.clone().into();
            }
            out.insert("error".into(), e);
        }
        out.insert("results".into(), Value::Object(self.results.clone()));
        out.insert("provenance".into(), Value::Object(self.provenance.clone()));
        if let Some(m) = meta {
            out.insert("meta".into(), m);
        }
        Value::Object(out)
    }

    pub fn to_json(&self, meta: Option<Value>) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value(meta)).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable form: one `key: value` line per scalar, nested keys
    /// joined with dots, long arrays summarized.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, if self.failure.is_some() { "error" } else { "ok" });
        if let Some(rows) = self.results.get("rows").and_then(Value::as_array) {
            for row in rows {
                out.push_str(&table_line(row));
            }
        }
        for (k, v) in &self.results {
            if k != "rows" {
                flatten(k, v, &mut out);
            }
        }
        if let Some(f) = &self.failure {
            out.push_str(&format!("error: {}\n", f.message));
            if let Some(h) = &f.hint {
                out.push_str(&format!("hint: {h}\n"));
            }
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn table_line(row: &Value) -> String {
    let get = |k: &str| row.get(k).map(scalar).unwrap_or_default();
    let cells = if let Some(err) = row.get("error") {
        format!("error: {}", scalar(err))
    } else {
        format!(
            "r={} f={} s={} g={} 1-k/s={}",
            get("r"),
            get("f"),
            get("s"),
            get("g"),
            get("hoffman")
        )
    };
    format!(
        "  {:<28} ({},{},{},{})  {}\n",
        get("name"),
        get("v"),
        get("k"),
        get("lambda"),
        get("mu"),
        cells
    )
}

const INLINE_ARRAY_LIMIT: usize = 16;

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                flatten(&format!("{prefix}.{k}"), inner, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            if items.len() <= INLINE_ARRAY_LIMIT {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{prefix}: [{}]\n", joined.join(", ")));
            } else {
                out.push_str(&format!("{prefix}: [{} items]\n", items.len()));
            }
        }
        Value::Array(items) => {
            if items.len() <= INLINE_ARRAY_LIMIT && items.iter().all(Value::is_object) {
                for (i, item) in items.iter().enumerate() {
                    flatten(&format!("{prefix}[{i}]"), item, out);
                }
            } else {
                out.push_str(&format!("{prefix}: [{} items]\n", items.len()));
            }
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout() {
        let mut r = Report::new("demo");
        r.input_digest = digest(b"abc");
        r.set("bound", "80/3");
        r.label("bound", COMPUTED_EXACT);
        let v = r.to_value(None);
        assert_eq!(
            v["input_digest"],
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
        assert_eq!(v["status"], "ok");
        assert_eq!(v["results"]["bound"], "80/3");
        assert!(v.get("meta").is_none());
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys[..3], ["schema_version", "command", "input_digest"]);
    }

    #[test]
    fn failure_and_text() {
        let mut r = Report::new("demo");
        r.set("nested", json!({"a": 1, "list": [1, 2]}));
        r.failure = Some(Failure::new(ExitCode::Assumption, "bad").with_hint("try the complement"));
        assert_eq!(r.exit_code().code(), 3);
        let t = r.to_text();
        assert!(t.contains("nested.a: 1\n"));
        assert!(t.contains("nested.list: [1, 2]\n"));
        assert!(t.contains("hint: try the complement\n"));
        assert_eq!(r.to_value(None)["error"]["hint"], "try the complement");
    }
}
