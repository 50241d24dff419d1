//! Shared JSON plumbing for the file formats the command-line tool reads
//! and writes. Numbers travel as decimal strings so arbitrary-precision
//! values survive the trip; nothing here is exposed outside the crate
//! except the error type.

use crate::arith::Rational;
use serde_json::Value;
use std::str::FromStr;

/// Error for malformed input documents: wrong shape, missing fields, or
/// numbers that fail to parse exactly.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct JsonError(pub String);

impl JsonError {
    pub(crate) fn new(msg: impl Into<String>) -> JsonError {
        JsonError(msg.into())
    }
}

pub(crate) fn rat_to_value(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub(crate) fn rat_from_value(v: &Value, what: &str) -> Result<Rational, JsonError> {
    let s = v
        .as_str()
        .ok_or_else(|| JsonError::new(format!("{what}: expected a string-encoded number")))?;
    Rational::from_str(s).map_err(|e| JsonError::new(format!("{what}: {e}")))
}

pub(crate) fn rat_vec(v: &Value, what: &str) -> Result<Vec<Rational>, JsonError> {
    let arr = v
        .as_array()
        .ok_or_else(|| JsonError::new(format!("{what}: expected an array")))?;
    arr.iter()
        .enumerate()
        .map(|(i, item)| rat_from_value(item, &format!("{what}[{i}]")))
        .collect()
}

pub(crate) fn rat_array<const N: usize>(v: &Value, what: &str) -> Result<[Rational; N], JsonError> {
    let vec = rat_vec(v, what)?;
    let len = vec.len();
    vec.try_into()
        .map_err(|_| JsonError::new(format!("{what}: expected {N} entries, found {len}")))
}

pub(crate) fn obj_field<'a>(v: &'a Value, field: &str, what: &str) -> Result<&'a Value, JsonError> {
    v.as_object()
        .ok_or_else(|| JsonError::new(format!("{what}: expected an object")))?
        .get(field)
        .ok_or_else(|| JsonError::new(format!("{what}: missing field \"{field}\"")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rationals_round_trip_as_strings() {
        let q = Rational::from_str("-7/3").unwrap();
        let v = rat_to_value(&q);
        assert_eq!(v, json!("-7/3"));
        assert_eq!(rat_from_value(&v, "q").unwrap(), q);
    }

    #[test]
    fn errors_name_the_offending_location() {
        let err = rat_from_value(&json!(12), "elements[0]").unwrap_err();
        assert!(err.to_string().contains("elements[0]"));
        let err = rat_vec(&json!(["1", "x"]), "elements").unwrap_err();
        assert!(err.to_string().contains("elements[1]"));
        let err = rat_array::<3>(&json!(["1", "2"]), "row").unwrap_err();
        assert!(err.to_string().contains("expected 3 entries, found 2"));
        let err = obj_field(&json!({"a": 1}), "b", "doc").unwrap_err();
        assert!(err.to_string().contains("missing field \"b\""));
    }
}
