//! Operand parsing and JSON encoding for the CLI.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::exactmat::IntMatrix;
use crate::perm::{Permutation, Sign};

pub fn parse_int(token: &str) -> Result<BigInt> {
    BigInt::from_str(token).map_err(|_| Error::Malformed(format!("not an integer: {token:?}")))
}

/// Matrix literal: rows separated by `;` or newlines, entries by whitespace.
pub fn parse_matrix_text(text: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<BigInt>> = text
        .split([';', '\n'])
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| r.split_whitespace().map(parse_int).collect())
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::Malformed("empty matrix literal".into()));
    }
    IntMatrix::from_rows(rows, 0)
}

fn int_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => parse_int(&n.to_string()),
        Value::String(s) => parse_int(s.trim()),
        other => Err(Error::Malformed(format!(
            "expected an integer, got {other}"
        ))),
    }
}

fn row_from_value(v: &Value) -> Result<Vec<BigInt>> {
    match v {
        Value::Array(items) => items.iter().map(int_from_value).collect(),
        other => Err(Error::Malformed(format!(
            "expected an array of integers, got {other}"
        ))),
    }
}

/// JSON matrix: `{"rows": m, "cols": n, "entries": [[…], …]}`, a bare array
/// of rows, or a flat array (one row).
pub fn matrix_from_json_value(v: &Value) -> Result<IntMatrix> {
    match v {
        Value::Object(obj) => {
            let entries = obj
                .get("entries")
                .ok_or_else(|| Error::Malformed("matrix object lacks \"entries\"".into()))?;
            let rows: Vec<Vec<BigInt>> = match entries {
                Value::Array(rs) => rs.iter().map(row_from_value).collect::<Result<_>>()?,
                _ => return Err(Error::Malformed("\"entries\" must be an array".into())),
            };
            let declared = |key: &str| -> Result<Option<usize>> {
                obj.get(key)
                    .map(|x| {
                        x.as_u64()
                            .map(|n| n as usize)
                            .ok_or_else(|| Error::Malformed(format!("\"{key}\" must be a count")))
                    })
                    .transpose()
            };
            let m = declared("rows")?;
            let n = declared("cols")?;
            if let Some(m) = m {
                if m != rows.len() {
                    return Err(Error::Malformed(format!(
                        "\"rows\" is {m} but {} rows were given",
                        rows.len()
                    )));
                }
            }
            let cols = match (n, rows.first()) {
                (Some(n), Some(r)) if n != r.len() => {
                    return Err(Error::Malformed(format!(
                        "\"cols\" is {n} but rows have {} entries",
                        r.len()
                    )))
                }
                (Some(n), _) => n,
                (None, Some(r)) => r.len(),
                (None, None) => return Err(Error::Malformed("empty matrix needs \"cols\"".into())),
            };
            IntMatrix::from_rows(rows, cols)
        }
        Value::Array(items) if items.iter().all(Value::is_array) && !items.is_empty() => {
            let rows = items.iter().map(row_from_value).collect::<Result<_>>()?;
            IntMatrix::from_rows(rows, 0)
        }
        Value::Array(_) => IntMatrix::row_vector(&row_from_value(v)?),
        other => Err(Error::Malformed(format!("expected a matrix, got {other}"))),
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))
}

/// Integer list such as `"1 3"` or `"1,3"`.
pub fn parse_list(text: &str) -> Result<Vec<BigInt>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(parse_int)
        .collect()
}

pub fn int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer is a JSON number"))
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.row_iter().map(ints).collect::<Vec<_>>(),
    })
}

pub fn permutation(p: &Permutation) -> Value {
    json!({
        "images": p.one_based(),
        "cycles": p.to_string(),
    })
}

pub fn sign(s: Sign) -> Value {
    json!(s.as_i64())
}

pub fn one_based(indices: &[usize]) -> Value {
    json!(indices.iter().map(|i| i + 1).collect::<Vec<_>>())
}
