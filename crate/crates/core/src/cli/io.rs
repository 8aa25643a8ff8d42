//! Matrix and vector text formats.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::CliError;
use crate::lattice::IntVector;
use crate::polytope::Configuration;
use crate::semigroup::IntBox;

const MAX_SAFE: i64 = (1 << 53) - 1;

fn parse_int(v: &Value) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(CliError::InvalidInput(format!("{n} is not an integer")))
            }
        }
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| CliError::InvalidInput(format!("{s:?} is not an integer"))),
        other => Err(CliError::InvalidInput(format!("expected an integer, found {other}"))),
    }
}

/// Parses `{"columns": [[...], ...]}`; entries may be numbers or decimal strings.
pub fn parse_matrix_json(text: &str) -> Result<Vec<IntVector>, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::InvalidInput(format!("matrix JSON: {e}")))?;
    let cols = doc
        .get("columns")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::InvalidInput("matrix JSON needs a \"columns\" array".into()))?;
    cols.iter()
        .map(|c| {
            c.as_array()
                .ok_or_else(|| CliError::InvalidInput("each column must be an array".into()))?
                .iter()
                .map(parse_int)
                .collect()
        })
        .collect()
}

/// An integer that is written as a JSON number when it is exactly
/// representable as a double and as a string otherwise.
pub fn int_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(i) if (-MAX_SAFE..=MAX_SAFE).contains(&i) => json!(i),
        _ => json!(x.to_string()),
    }
}

/// The matrix file format for a configuration.
pub fn matrix_json(a: &Configuration) -> String {
    let cols: Vec<Value> = a
        .columns()
        .iter()
        .map(|c| Value::Array(c.iter().map(int_json).collect()))
        .collect();
    json!({ "columns": cols }).to_string()
}

/// Inline columns: `1,0;1,1;0,2`.
pub fn parse_columns(s: &str) -> Result<Vec<IntVector>, CliError> {
    s.split(';')
        .filter(|c| !c.trim().is_empty())
        .map(parse_int_list)
        .collect()
}

/// Comma-separated integers.
pub fn parse_int_list(s: &str) -> Result<IntVector, CliError> {
    s.split(',')
        .map(|t| BigInt::from_str(t.trim()).map_err(|_| CliError::InvalidInput(format!("{t:?} is not an integer"))))
        .collect()
}

/// A box given as `lo..hi` per coordinate, separated by commas
/// (`0..4,0..4`), or a single `lo..hi` applied to every coordinate.
pub fn parse_box(s: &str, d: usize) -> Result<IntBox, CliError> {
    let ranges: Vec<(BigInt, BigInt)> = s
        .split(',')
        .map(|r| {
            let (lo, hi) = r
                .split_once("..")
                .ok_or_else(|| CliError::InvalidInput(format!("box range {r:?} must look like lo..hi")))?;
            let lo = BigInt::from_str(lo.trim()).map_err(|_| CliError::InvalidInput(format!("bad bound {lo:?}")))?;
            let hi = BigInt::from_str(hi.trim()).map_err(|_| CliError::InvalidInput(format!("bad bound {hi:?}")))?;
            Ok((lo, hi))
        })
        .collect::<Result<_, CliError>>()?;
    let ranges = match ranges.len() {
        1 => vec![ranges[0].clone(); d],
        k if k == d => ranges,
        k => return Err(CliError::InvalidInput(format!("box has {k} ranges, expected 1 or {d}"))),
    };
    let (lower, upper) = ranges.into_iter().unzip();
    Ok(IntBox::new(lower, upper))
}

/// An inclusive range of small integers: `3..6` or a single value.
pub fn parse_range(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::InvalidInput(format!("range {s:?} must look like a..b or a single integer"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

/// 1-based column indices: `1,3`.
pub fn parse_face(s: &str, n: usize) -> Result<Vec<usize>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let j: usize = t.trim().parse().map_err(|_| CliError::InvalidInput(format!("bad column index {t:?}")))?;
            if j == 0 || j > n {
                return Err(CliError::InvalidInput(format!("column index {j} outside 1..={n}")));
            }
            Ok(j - 1)
        })
        .collect()
}
