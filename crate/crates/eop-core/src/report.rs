//! Canonical JSON report envelope and a small JSON-Schema validator.
//!
//! Every JSON document the command-line tool emits is wrapped in the same
//! envelope — report kind, format version, the fully resolved run defaults,
//! and a payload whose one universal field is `pass` — and is checked against
//! the shipped schema document before it is written.  Serialization goes
//! through `serde_json`'s ordered maps, so output is byte-stable for a given
//! input.

use serde::Serialize;
use serde_json::Value;

use crate::error::{EopError, Result};

/// Report format version; bumped on breaking envelope changes.
pub const REPORT_VERSION: &str = "1";

/// The fully resolved run configuration echoed into every report.
#[derive(Debug, Clone, Serialize)]
pub struct DefaultsEcho {
    pub family: Option<String>,
    pub omega: f64,
    pub g: f64,
    pub f1: f64,
    pub m: usize,
    pub p: usize,
    pub nmax: usize,
    pub lmax: usize,
    pub grid_points: usize,
    pub format: String,
    pub seed: u64,
}

/// Wrap a payload into the canonical envelope.
pub fn envelope<T: Serialize>(kind: &str, defaults: &DefaultsEcho, payload: &T) -> Result<Value> {
    let payload = serde_json::to_value(payload)
        .map_err(|e| EopError::ConstructionError(format!("payload serialization: {e}")))?;
    let defaults = serde_json::to_value(defaults)
        .map_err(|e| EopError::ConstructionError(format!("defaults serialization: {e}")))?;
    Ok(serde_json::json!({
        "report": kind,
        "version": REPORT_VERSION,
        "defaults": defaults,
        "payload": payload,
    }))
}

/// Canonical text form: pretty-printed with sorted keys (the default map is
/// ordered) and a trailing newline.
pub fn canonical_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON value always serializes");
    s.push('\n');
    s
}

fn type_matches(value: &Value, ty: &str) -> bool {
    match ty {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        "number" => value.is_number(),
        "integer" => {
            value.is_i64()
                || value.is_u64()
                || value.as_f64().map_or(false, |f| f.fract() == 0.0 && f.is_finite())
        }
        _ => false,
    }
}

fn resolve_ref<'a>(root: &'a Value, reference: &str) -> Result<&'a Value> {
    let path = reference.strip_prefix("#/").ok_or_else(|| {
        EopError::ConstructionError(format!("unsupported schema reference {reference}"))
    })?;
    let mut node = root;
    for part in path.split('/') {
        node = node.get(part).ok_or_else(|| {
            EopError::ConstructionError(format!("dangling schema reference {reference}"))
        })?;
    }
    Ok(node)
}

fn validate_at(instance: &Value, schema: &Value, root: &Value, path: &str) -> Result<()> {
    let fail = |msg: String| {
        Err(EopError::ConstructionError(format!(
            "report does not validate against the schema at {path}: {msg}"
        )))
    };
    let obj = match schema {
        Value::Bool(true) => return Ok(()),
        Value::Bool(false) => return fail("schema forbids any value".into()),
        Value::Object(o) => o,
        _ => return fail("malformed schema node".into()),
    };

    if let Some(Value::String(reference)) = obj.get("$ref") {
        return validate_at(instance, resolve_ref(root, reference)?, root, path);
    }

    if let Some(ty) = obj.get("type") {
        let ok = match ty {
            Value::String(s) => type_matches(instance, s),
            Value::Array(options) => options
                .iter()
                .filter_map(|t| t.as_str())
                .any(|s| type_matches(instance, s)),
            _ => return fail("malformed `type`".into()),
        };
        if !ok {
            return fail(format!("expected type {ty}, got {instance}"));
        }
    }

    if let Some(Value::Array(options)) = obj.get("enum") {
        if !options.contains(instance) {
            return fail(format!("{instance} not in enum {options:?}"));
        }
    }

    if let Some(Value::Array(required)) = obj.get("required") {
        let map = instance
            .as_object()
            .ok_or_else(|| {
                EopError::ConstructionError(format!(
                    "report does not validate against the schema at {path}: `required` on non-object"
                ))
            })?;
        for key in required.iter().filter_map(|k| k.as_str()) {
            if !map.contains_key(key) {
                return fail(format!("missing required key `{key}`"));
            }
        }
    }

    if let Some(Value::Object(props)) = obj.get("properties") {
        if let Some(map) = instance.as_object() {
            for (key, subschema) in props {
                if let Some(child) = map.get(key) {
                    validate_at(child, subschema, root, &format!("{path}/{key}"))?;
                }
            }
            if let Some(Value::Bool(false)) = obj.get("additionalProperties") {
                for key in map.keys() {
                    if !props.contains_key(key) {
                        return fail(format!("unexpected key `{key}`"));
                    }
                }
            }
        }
    }

    if let Some(items) = obj.get("items") {
        if let Some(arr) = instance.as_array() {
            for (i, child) in arr.iter().enumerate() {
                validate_at(child, items, root, &format!("{path}/{i}"))?;
            }
        }
    }

    if let Some(Value::Array(options)) = obj.get("oneOf") {
        let matches = options
            .iter()
            .filter(|s| validate_at(instance, s, root, path).is_ok())
            .count();
        if matches != 1 {
            return fail(format!("matched {matches} of the oneOf alternatives"));
        }
    }

    Ok(())
}

/// Validate an instance against a schema document (a pragmatic subset of
/// JSON Schema: `$ref` into the same document, `type`, `enum`, `required`,
/// `properties`, `additionalProperties: false`, `items`, `oneOf`).
pub fn validate(instance: &Value, schema: &Value) -> Result<()> {
    validate_at(instance, schema, schema, "#")
}
