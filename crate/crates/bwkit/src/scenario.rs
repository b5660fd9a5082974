//! Scenario files: a line-oriented key=value format plus a JSON
//! alternative, both parsing rationals exactly as "p/q" strings.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use serde_json::Value;

use crate::Error;

/// A named invocation of one registered verification.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    /// Registered verification identifier.
    pub target: String,
    pub params: BTreeMap<String, String>,
    /// Expected values by report key, exact strings.
    pub expectations: BTreeMap<String, String>,
}

/// Parses "p/q" or a plain integer exactly, requiring canonical q > 0.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = |msg: &str| Error::Domain(format!("invalid rational {:?}: {}", s, msg));
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|e| bad(&e.to_string()))?;
            Ok(BigRational::from_integer(n))
        }
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|e| bad(&e.to_string()))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| bad(&e.to_string()))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            if !d.is_positive() {
                return Err(bad("denominator must be positive"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Line-oriented format: `name = ...`, `target = ...`, `param.key = value`,
/// `expect.key = value`; blank lines and `#` comments allowed.
pub fn parse_key_value(text: &str) -> Result<Scenario, Error> {
    let mut sc = Scenario::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| Error::Domain(format!("line {}: {}", lineno + 1, msg));
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| at(format!("expected key=value, got {:?}", line)))?;
        let key = key.trim();
        let value = value.trim().to_string();
        match key {
            "name" => sc.name = value,
            "target" => sc.target = value,
            _ => {
                if let Some(p) = key.strip_prefix("param.") {
                    sc.params.insert(p.to_string(), value);
                } else if let Some(e) = key.strip_prefix("expect.") {
                    sc.expectations.insert(e.to_string(), value);
                } else {
                    return Err(at(format!("unknown key {:?}", key)));
                }
            }
        }
    }
    finish(sc)
}

/// JSON alternative with the same fields; params and expectations are
/// string-to-string maps so rationals never round-trip through floats.
pub fn parse_json(text: &str) -> Result<Scenario, Error> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Domain(format!("line {} column {}: {}", e.line(), e.column(), e)))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Domain("scenario JSON must be an object".into()))?;
    let mut sc = Scenario::default();
    let get_str = |key: &str| -> Result<String, Error> {
        obj.get(key)
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| Error::Domain(format!("missing string field {:?}", key)))
    };
    sc.name = get_str("name")?;
    sc.target = get_str("target")?;
    for (field, dest) in [("params", 0usize), ("expectations", 1)] {
        if let Some(section) = obj.get(field) {
            let map = section
                .as_object()
                .ok_or_else(|| Error::Domain(format!("{:?} must be an object", field)))?;
            for (k, val) in map {
                let s = val.as_str().ok_or_else(|| {
                    Error::Domain(format!(
                        "{}.{} must be a string (rationals as \"p/q\")",
                        field, k
                    ))
                })?;
                if dest == 0 {
                    sc.params.insert(k.clone(), s.to_string());
                } else {
                    sc.expectations.insert(k.clone(), s.to_string());
                }
            }
        }
    }
    finish(sc)
}

/// Dispatch by leading character: JSON objects start with `{`.
pub fn parse(text: &str) -> Result<Scenario, Error> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_key_value(text)
    }
}

fn finish(sc: Scenario) -> Result<Scenario, Error> {
    if sc.name.is_empty() {
        return Err(Error::Domain("scenario has no name".into()));
    }
    if sc.target.is_empty() {
        return Err(Error::Domain("scenario has no target".into()));
    }
    // Every rational-looking param must parse exactly.
    for (k, v) in &sc.params {
        if v.chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '-' | '/' | ' '))
            && v.chars().any(|c| c.is_ascii_digit())
        {
            parse_rational(v).map_err(|e| Error::Domain(format!("param {:?}: {}", k, e)))?;
        }
    }
    Ok(sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(parse_rational("4/3").unwrap(), rat(4, 3));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rational(" -8/12 ").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn key_value_round_trip() {
        let text = "# demo\nname = spectrum-check\ntarget = dispersion-spectrum\nparam.A = -7\nparam.B = -8\nexpect.mass2_ratio = 4/3\n";
        let sc = parse(text).unwrap();
        assert_eq!(sc.target, "dispersion-spectrum");
        assert_eq!(sc.params["A"], "-7");
        assert_eq!(sc.expectations["mass2_ratio"], "4/3");
    }

    #[test]
    fn json_alternative_matches() {
        let kv = parse("name = x\ntarget = t\nparam.A = -7\n").unwrap();
        let js =
            parse(r#"{"name": "x", "target": "t", "params": {"A": "-7"}}"#).unwrap();
        assert_eq!(kv, js);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("name = x\nbogus line\n").unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let err = parse("{\"name\": }").unwrap_err();
        assert!(err.to_string().contains("column"));
    }

    #[test]
    fn float_params_are_rejected() {
        let err = parse("name = x\ntarget = t\nparam.A = 1/0\n").unwrap_err();
        assert!(err.to_string().contains("A"));
    }
}
