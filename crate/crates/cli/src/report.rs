use std::io::Read;
use std::path::Path;
use std::time::Instant;

use clutterkit::clutter::{instance_from_document, ClutterDocument};
use clutterkit::shelling::ShellingOrder;
use clutterkit::{Clutter, Error, Instance, VertexSet};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// A failure that ends the run without a report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Library(e) if e.is_size_guard() => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Library(e) => write!(f, "{e}"),
        }
    }
}

/// What a command computed: `holds` decides between exit 0 and 1.
pub struct Outcome {
    pub result: Value,
    pub witness: Value,
    pub holds: bool,
}

impl Outcome {
    pub fn holds(result: Value, witness: Value) -> Self {
        Outcome {
            result,
            witness,
            holds: true,
        }
    }

    pub fn flag(holds: bool, witness: Value) -> Self {
        Outcome {
            result: Value::Bool(holds),
            witness,
            holds,
        }
    }

    pub fn absent(witness: Value) -> Self {
        Outcome {
            result: Value::Null,
            witness,
            holds: false,
        }
    }
}

pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub outcome: Outcome,
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let value = json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.outcome.result,
            "witness": self.outcome.witness,
            "elapsed_ms": self.elapsed_ms,
        });
        serde_json::to_string_pretty(&value).expect("reports always serialize")
    }
}

pub struct Stopwatch(Option<Instant>);

impl Stopwatch {
    pub fn start(enabled: bool) -> Self {
        Stopwatch(enabled.then(Instant::now))
    }

    pub fn elapsed_ms(&self) -> Option<u128> {
        self.0.map(|t| t.elapsed().as_millis())
    }
}

/// Reads a clutter document from `path` or stdin. A report produced by
/// another command is accepted too, in which case its `result` is read.
pub fn read_instance(path: Option<&Path>) -> Result<(Instance, String), Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let mut value: Value =
        serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))?;
    if let Some(obj) = value.as_object_mut() {
        if obj.contains_key("command") && obj.contains_key("result") {
            value = obj.remove("result").expect("key checked");
        }
    }
    let doc: ClutterDocument =
        serde_json::from_value(value).map_err(|e| Error::Malformed(e.to_string()))?;
    let instance = instance_from_document(doc)?;
    let digest = hex::encode(Sha256::digest(instance.to_json().as_bytes()));
    Ok((instance, digest))
}

pub fn names(c: &Clutter, s: &VertexSet) -> Value {
    json!(c.set_names(s))
}

pub fn name_list(c: &Clutter, sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| names(c, s)).collect())
}

/// The facet order and, for every pair `i < j`, the witness vertex `v` of
/// `F_j ∖ F_i` and the index `l` with `F_j ∖ F_l = {v}`. Indices are 0-based.
pub fn shelling_witness(c: &Clutter, order: &ShellingOrder) -> Value {
    let rows: Vec<Value> = (1..order.len())
        .map(|j| {
            let pairs: Vec<Value> = (0..j)
                .map(|i| {
                    let w = order.witness(i, j);
                    json!({"earlier": i, "vertex": c.label(w.vertex), "facet": w.facet})
                })
                .collect();
            json!({"facet": j, "pairs": pairs})
        })
        .collect();
    Value::Array(rows)
}
