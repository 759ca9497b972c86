//! Text and JSON forms of polynomials.
//!
//! JSON: `{"vars":"p","terms":[{"mono":{"1":3},"coef":"4/3"}, ...]}` with
//! string-encoded rationals, terms in canonical order.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hirota::{x_to_p, HirotaEquation};
use crate::ring::{format_rat, parse_rat, Mono, PPoly, Poly, Rat, Vars, XPoly};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn mono_to_json(m: &Mono) -> Value {
    let map: Map<String, Value> = m
        .factors()
        .iter()
        .map(|&(n, e)| (n.to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

pub fn mono_from_json(v: &Value) -> Result<Mono> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("monomial must be an object"))?;
    let mut pairs = Vec::with_capacity(obj.len());
    for (k, e) in obj {
        let n: u32 = k
            .parse()
            .map_err(|_| parse_err(format!("bad variable index {k:?}")))?;
        if n.is_multiple_of(2) {
            return Err(Error::NotOddIndex(n as i64));
        }
        let e = e
            .as_u64()
            .filter(|&e| e >= 1 && e <= u32::MAX as u64)
            .ok_or_else(|| parse_err(format!("bad exponent for index {n}")))?;
        pairs.push((n, e as u32));
    }
    Ok(Mono::from_pairs(pairs))
}

pub fn poly_to_json<V: Vars>(p: &Poly<V>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({"mono": mono_to_json(m), "coef": format_rat(c)}))
        .collect();
    json!({"vars": V::SYMBOL, "terms": terms})
}

pub fn poly_from_json<V: Vars>(v: &Value) -> Result<Poly<V>> {
    let vars = v
        .get("vars")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("missing \"vars\""))?;
    if vars != V::SYMBOL {
        return Err(parse_err(format!(
            "expected vars {:?}, found {vars:?}",
            V::SYMBOL
        )));
    }
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing \"terms\" array"))?;
    let mut out = Poly::zero();
    for t in terms {
        let mono = mono_from_json(
            t.get("mono")
                .ok_or_else(|| parse_err("term without \"mono\""))?,
        )?;
        let coef = t
            .get("coef")
            .and_then(Value::as_str)
            .ok_or_else(|| parse_err("coefficient must be a string"))?;
        out.add_term(mono, parse_rat(coef)?);
    }
    Ok(out)
}

/// A tau function from JSON in either `p` or `x` variables.
pub fn tau_from_json(text: &str) -> Result<PPoly> {
    let v: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    match v.get("vars").and_then(Value::as_str) {
        Some("x") => Ok(x_to_p(&poly_from_json::<crate::ring::XVar>(&v)?)),
        _ => poly_from_json(&v),
    }
}

pub fn hierarchy_to_json(eqs: &[HirotaEquation], raw: bool) -> Value {
    let list: Vec<Value> = eqs
        .iter()
        .map(|e| {
            json!({
                "y": mono_to_json(&e.y),
                "equation": poly_to_json(if raw { &e.raw } else { &e.canonical }),
            })
        })
        .collect();
    Value::Array(list)
}

fn parse_mono(s: &str, symbol: &str) -> Result<Mono> {
    let mut pairs = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        let body = factor
            .strip_prefix(symbol)
            .ok_or_else(|| parse_err(format!("expected {symbol}<n>, found {factor:?}")))?;
        let (n, e) = match body.split_once('^') {
            Some((n, e)) => (n, e),
            None => (body, "1"),
        };
        let n: u32 = n
            .parse()
            .map_err(|_| parse_err(format!("bad index in {factor:?}")))?;
        let e: u32 = e
            .parse()
            .map_err(|_| parse_err(format!("bad exponent in {factor:?}")))?;
        if n.is_multiple_of(2) {
            return Err(Error::NotOddIndex(n as i64));
        }
        pairs.push((n, e));
    }
    Ok(Mono::from_pairs(pairs))
}

fn parse_term<V: Vars>(s: &str) -> Result<(Mono, Rat)> {
    let s = s.trim();
    let starts_with_var = s.starts_with(V::SYMBOL);
    if starts_with_var {
        return Ok((parse_mono(s, V::SYMBOL)?, parse_rat("1")?));
    }
    match s.split_once('*') {
        Some((c, rest)) => Ok((parse_mono(rest, V::SYMBOL)?, parse_rat(c)?)),
        None => Ok((Mono::one(), parse_rat(s)?)),
    }
}

/// Parses the canonical text form produced by `Display`, e.g.
/// `4/3*p1^3 - 4/3*p3`. Terms may come in any order.
pub fn parse_poly<V: Vars>(text: &str) -> Result<Poly<V>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let mut out = Poly::zero();
    let (mut negative, mut rest) = match text.strip_prefix('-') {
        Some(r) => (true, r.trim_start()),
        None => (false, text),
    };
    loop {
        let split = [" + ", " - "]
            .iter()
            .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
            .min_by_key(|&(i, _)| i);
        let (chunk, next) = match split {
            Some((i, sep)) => (&rest[..i], Some((sep == " - ", &rest[i + 3..]))),
            None => (rest, None),
        };
        let (m, c) = parse_term::<V>(chunk)?;
        out.add_term(m, if negative { -c } else { c });
        match next {
            Some((neg, r)) => {
                negative = neg;
                rest = r;
            }
            None => return Ok(out),
        }
    }
}

/// Text form of a polynomial in power sums or in the times.
pub fn render_tau(f: &PPoly, basis_x: bool) -> String {
    if basis_x {
        let x: XPoly = crate::hirota::p_to_x(f);
        x.to_string()
    } else {
        f.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermion::q_lambda;
    use crate::hirota::{bkp_equation, p_to_x};
    use crate::ring::{DPoly, DVar, PVar};

    #[test]
    fn json_shape() {
        let q = q_lambda(&[2, 1]);
        let v = poly_to_json(&q);
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"coef":"4/3","mono":{"1":3}},{"coef":"-4/3","mono":{"3":1}}],"vars":"p"}"#
        );
        assert_eq!(poly_from_json::<PVar>(&v).unwrap(), q);
    }

    #[test]
    fn json_rejects_bad_input() {
        let wrong_vars = json!({"vars": "x", "terms": []});
        assert!(poly_from_json::<PVar>(&wrong_vars).is_err());
        let even = json!({"vars": "p", "terms": [{"mono": {"2": 1}, "coef": "1"}]});
        assert_eq!(poly_from_json::<PVar>(&even), Err(Error::NotOddIndex(2)));
        let numeric = json!({"vars": "p", "terms": [{"mono": {}, "coef": 1}]});
        assert!(poly_from_json::<PVar>(&numeric).is_err());
    }

    #[test]
    fn tau_in_either_basis() {
        let q = q_lambda(&[3, 1]);
        let as_x = poly_to_json(&p_to_x(&q)).to_string();
        assert_eq!(tau_from_json(&as_x).unwrap(), q);
        let as_p = poly_to_json(&q).to_string();
        assert_eq!(tau_from_json(&as_p).unwrap(), q);
    }

    #[test]
    fn text_parses_back() {
        let e = bkp_equation().scale(&crate::ring::ratio(8, 45));
        assert_eq!(parse_poly::<DVar>(&e.to_string()).unwrap(), e);
        let f: DPoly = parse_poly("-D3 + 2 - 1/2*D1^2*D3").unwrap();
        assert_eq!(f.to_string(), "2 - D3 - 1/2*D1^2*D3");
        assert_eq!(parse_poly::<PVar>("0").unwrap(), PPoly::zero());
        assert!(parse_poly::<PVar>("p2").is_err());
        assert!(parse_poly::<PVar>("x1").is_err());
    }
}
