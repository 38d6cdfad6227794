//! The versioned report envelope shared by every command.

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_NAME: &str = "hopfgal-report";
pub const VERSION: &str = hopf_galois::VERSION;

/// A yes/no verdict; a negative one always carries a witness.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub name: String,
    pub ok: bool,
    pub witness: Option<Value>,
}

impl Certificate {
    pub fn pass(name: impl Into<String>) -> Certificate {
        Certificate { name: name.into(), ok: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Certificate {
        Certificate { name: name.into(), ok: false, witness: Some(witness) }
    }

    /// `pass` when `ok`, otherwise `fail` with the lazily built witness.
    pub fn check(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Value) -> Certificate {
        if ok {
            Certificate::pass(name)
        } else {
            Certificate::fail(name, witness())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: Value,
    pub field: String,
    pub ok: bool,
    pub certificates: Vec<Certificate>,
    pub data: Value,
}

impl Report {
    pub fn new(command: &str, input: Value, field: String, certificates: Vec<Certificate>, data: Value) -> Report {
        Report {
            schema: SCHEMA_NAME,
            version: VERSION,
            command: command.into(),
            input,
            field,
            ok: certificates.iter().all(|c| c.ok),
            certificates,
            data,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// JSON Schema (draft 2020-12) for [`Report`] and each command's `data`.
pub fn schema() -> Value {
    let can = json!({
        "type": "object",
        "required": ["domain_dim", "codomain_dim", "rank", "injective", "surjective", "bijective"],
        "properties": {
            "domain_dim": {"type": "integer", "minimum": 0},
            "codomain_dim": {"type": "integer", "minimum": 0},
            "rank": {"type": "integer", "minimum": 0},
            "injective": {"type": "boolean"},
            "surjective": {"type": "boolean"},
            "bijective": {"type": "boolean"}
        }
    });
    let poset = json!({
        "type": "object",
        "required": ["elements", "covers"],
        "properties": {
            "elements": {"type": "array", "items": {"type": "string"}},
            "covers": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}}
        }
    });
    let closed = json!({
        "type": "object",
        "required": ["label", "closed"],
        "properties": {
            "label": {"type": "string"},
            "closed": {"type": "boolean"},
            "can": {"$ref": "#/$defs/can"}
        }
    });
    let commands = [
        "verify", "group-likes", "takeuchi", "connection", "can", "lattice", "closed", "bridge", "example-circle",
    ];
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$id": format!("urn:{SCHEMA_NAME}:{VERSION}"),
        "title": "hopfgal report",
        "type": "object",
        "required": ["schema", "version", "command", "input", "field", "ok", "certificates", "data"],
        "additionalProperties": false,
        "properties": {
            "schema": {"const": SCHEMA_NAME},
            "version": {"const": VERSION},
            "command": {"enum": commands},
            "input": {"type": "object"},
            "field": {"type": "string", "pattern": "^(Q|Qi|Fp:[0-9]+)$"},
            "ok": {"type": "boolean"},
            "certificates": {"type": "array", "items": {"$ref": "#/$defs/certificate"}},
            "data": {"type": "object"}
        },
        "allOf": [
            {"if": {"properties": {"command": {"const": "can"}}}, "then": {"properties": {"data": {"required": ["target", "results"], "properties": {"results": {"type": "array", "items": {"type": "object", "required": ["label"], "properties": {"can": {"$ref": "#/$defs/can"}, "bijective": {"type": "boolean"}}, "anyOf": [{"required": ["can"]}, {"required": ["bijective"]}]}}}}}}},
            {"if": {"properties": {"command": {"const": "closed"}}}, "then": {"properties": {"data": {"required": ["quotients", "subalgebras"], "properties": {"quotients": {"type": "array", "items": {"$ref": "#/$defs/closed"}}, "subalgebras": {"type": "array", "items": {"$ref": "#/$defs/closed"}}}}}}},
            {"if": {"properties": {"command": {"const": "takeuchi"}}}, "then": {"properties": {"data": {"required": ["round_trips", "sub_round_trips", "quot_round_trips"]}}}},
            {"if": {"properties": {"command": {"const": "example-circle"}}}, "then": {"properties": {"data": {"required": ["b_dim", "reduced", "lattice"], "properties": {"lattice": {"$ref": "#/$defs/poset"}}}}}},
            {"if": {"properties": {"command": {"const": "lattice"}}}, "then": {"properties": {"data": {"required": ["lattice"], "properties": {"lattice": {"$ref": "#/$defs/poset"}}}}}}
        ],
        "$defs": {
            "certificate": {
                "type": "object",
                "required": ["name", "ok", "witness"],
                "properties": {"name": {"type": "string"}, "ok": {"type": "boolean"}, "witness": {}},
                "if": {"properties": {"ok": {"const": false}}},
                "then": {"properties": {"witness": {"not": {"type": "null"}}}}
            },
            "can": can,
            "poset": poset,
            "closed": closed
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_certificates_carry_witnesses() {
        let c = Certificate::check("x", false, || json!({"rank": 1}));
        assert!(!c.ok && c.witness.is_some());
        let r = Report::new("verify", json!({}), "Q".into(), vec![c, Certificate::pass("y")], json!({}));
        assert!(!r.ok);
    }

    #[test]
    fn schema_names_the_core_fields() {
        let s = schema().to_string();
        for key in ["\"rank\"", "\"bijective\"", "\"closed\"", VERSION] {
            assert!(s.contains(key), "{key}");
        }
    }
}
