use std::fmt;
use std::fs;
use std::path::Path;

use qlab_core::{multiparam_q, q_lambda, PPoly, ParamFamily, ParamSeq};

pub const DEFAULT_MAX_WEIGHT: u32 = 32;

#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<qlab_core::Error> for UsageError {
    fn from(e: qlab_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, UsageError>;

pub fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// The weight cap from `QLAB_MAX_WEIGHT`, or the default.
pub fn weight_cap() -> Result<u32> {
    match std::env::var("QLAB_MAX_WEIGHT") {
        Ok(v) => v.trim().parse().map_err(|_| {
            usage(format!(
                "QLAB_MAX_WEIGHT must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT),
    }
}

pub fn check_weight(what: &str, weight: u64) -> Result<()> {
    let cap = weight_cap()?;
    if weight > cap as u64 {
        return Err(usage(format!(
            "{what} {weight} exceeds the weight limit {cap} (QLAB_MAX_WEIGHT)"
        )));
    }
    Ok(())
}

/// `3,1` or `()`/empty for the empty vector.
pub fn parse_index(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| usage(format!("bad index entry {t:?} in {s:?}")))
        })
        .collect()
}

pub fn parse_positive_index(s: &str) -> Result<Vec<i64>> {
    let v = parse_index(s)?;
    if let Some(bad) = v.iter().find(|&&x| x <= 0) {
        return Err(usage(format!("index entries must be positive, got {bad}")));
    }
    Ok(v)
}

/// `zero`, `factorial`, an inline list such as `0,1/2,-1`, or a file
/// holding such a list (commas or whitespace as separators).
pub fn parse_params(s: &str) -> Result<ParamFamily> {
    let path = Path::new(s);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| usage(format!("{s}: {e}")))?;
        let joined = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect::<Vec<_>>()
            .join(",");
        return Ok(joined.parse()?);
    }
    Ok(s.parse()?)
}

pub fn params_for(family: &ParamFamily, alpha: &[i64]) -> Result<ParamSeq> {
    let len = alpha.iter().copied().max().unwrap_or(1).max(1) as usize;
    Ok(family.materialize(len)?)
}

pub fn index_weight(v: &[i64]) -> u64 {
    v.iter().map(|x| x.unsigned_abs()).sum()
}

/// `q:LAMBDA`, `qa:ALPHA@PARAMS`, or the path of a JSON polynomial.
pub fn parse_tau(s: &str) -> Result<PPoly> {
    if let Some(rest) = s.strip_prefix("q:") {
        let lambda = parse_index(rest)?;
        check_weight("weight", index_weight(&lambda))?;
        return Ok(q_lambda(&lambda));
    }
    if let Some(rest) = s.strip_prefix("qa:") {
        let (alpha, params) = rest
            .split_once('@')
            .ok_or_else(|| usage(format!("expected qa:ALPHA@PARAMS, got {s:?}")))?;
        let alpha = parse_positive_index(alpha)?;
        check_weight("weight", index_weight(&alpha))?;
        let family = parse_params(params)?;
        return Ok(multiparam_q(&alpha, &params_for(&family, &alpha)?)?);
    }
    let path = Path::new(s);
    if !path.is_file() {
        return Err(usage(format!(
            "{s:?} is neither q:LAMBDA, qa:ALPHA@PARAMS nor a JSON file"
        )));
    }
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{s}: {e}")))?;
    let tau = qlab_core::io::tau_from_json(&text)?;
    check_weight("weight", tau.max_weight().unwrap_or(0) as u64)?;
    Ok(tau)
}
