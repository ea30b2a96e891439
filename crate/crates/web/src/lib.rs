//! Browser bindings: the Markoff tree, certified enclosures of the extremal
//! numbers, and the Lagrange sequences `q‖qξ‖` of their convergents.

use markoff_lab::exactnum::{floor_rat, RatInterval};
use markoff_lab::extremal::xi_enclosure_steps;
use markoff_lab::markoff::{cohn_matrix, locate, tree, MarkoffTriple, Side};
use markoff_lab::spectrum::{nu_sequence, Tail};
use markoff_lab::words::xi_word_stream;
use markoff_lab::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

pub const MAX_DEPTH: usize = 9;
pub const MAX_STEPS: usize = 40;
pub const MAX_DIGITS: usize = 2000;

fn path_string(t: &MarkoffTriple) -> String {
    t.path.iter().map(|s| s.letter()).collect()
}

/// Resolves either a path such as `LRL` (from `(2,1,1)`) or a triple `m,m1,m2`.
pub fn resolve(spec: &str) -> Result<MarkoffTriple> {
    let spec = spec.trim();
    if spec.contains(',') {
        let parts: Vec<BigInt> = spec
            .split(',')
            .map(|p| p.trim().parse::<BigInt>().map_err(|_| Error::InvalidInput(format!("not an integer: {p}"))))
            .collect::<Result<_>>()?;
        let [m, m1, m2] = parts.as_slice() else {
            return Err(Error::InvalidInput("expected three entries".into()));
        };
        return locate(m, m1, m2);
    }
    let path = spec
        .chars()
        .map(|c| match c.to_ascii_uppercase() {
            'L' => Ok(Side::Left),
            'R' => Ok(Side::Right),
            _ => Err(Error::InvalidInput(format!("path letters are L and R, got {c}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    MarkoffTriple::from_path(&path)
}

/// `x` truncated to `n` decimals.
pub fn decimal(x: &num_rational::BigRational, n: usize) -> String {
    let scale = BigInt::from(10).pow(n as u32);
    let v = floor_rat(&(x * num_rational::BigRational::from_integer(scale.clone())));
    let (neg, v) = (v.is_negative(), v.abs());
    let s = format!("{:0>width$}", v.to_string(), width = n + 1);
    let (int, frac) = s.split_at(s.len() - n);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

/// Longest common decimal prefix of the endpoints.
pub fn certified_decimal(iv: &RatInterval, max: usize) -> String {
    let (lo, hi) = (decimal(iv.lo(), max), decimal(iv.hi(), max));
    lo.chars().zip(hi.chars()).take_while(|(a, b)| a == b).map(|(a, _)| a).collect()
}

pub fn tree_json(depth: usize) -> Result<Value> {
    if depth > MAX_DEPTH {
        return Err(Error::InvalidInput(format!("depth is capped at {MAX_DEPTH}")));
    }
    let mut nodes = vec![MarkoffTriple::root()];
    nodes.extend(tree(depth));
    let nodes = nodes
        .iter()
        .map(|t| {
            let k = cohn_matrix(t)?.k;
            Ok(json!({
                "triple": [t.m.to_string(), t.m1.to_string(), t.m2.to_string()],
                "path": path_string(t),
                "k": k.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({ "depth": depth, "nodes": nodes }))
}

pub fn xi_json(spec: &str, steps: usize, digits: usize) -> Result<Value> {
    if steps > MAX_STEPS || digits > MAX_DIGITS {
        return Err(Error::InvalidInput(format!("at most {MAX_STEPS} steps and {MAX_DIGITS} digits")));
    }
    let t = resolve(spec)?;
    let e = xi_enclosure_steps(&t, steps)?;
    let w = xi_word_stream(&t, digits)?;
    let width = e.interval.width();
    let log10_width = if width.numer().bits() == 0 {
        f64::NEG_INFINITY
    } else {
        let (n, d) = (width.numer().bits() as f64, width.denom().bits() as f64);
        (n - d) * std::f64::consts::LOG10_2
    };
    Ok(json!({
        "triple": [t.m.to_string(), t.m1.to_string(), t.m2.to_string()],
        "path": path_string(&t),
        "steps": steps,
        "decimal": certified_decimal(&e.interval, 400),
        "log10_width": log10_width,
        "digits": w.to_comma_string(),
    }))
}

pub fn nu_json(spec: &str, digits: usize) -> Result<Value> {
    if digits > MAX_DIGITS {
        return Err(Error::InvalidInput(format!("at most {MAX_DIGITS} digits")));
    }
    let t = resolve(spec)?;
    let w = xi_word_stream(&t, digits)?;
    let s = nu_sequence(&w, &Tail::Unknown)?;
    let f = |x: &num_rational::BigRational| x.to_f64().unwrap_or(f64::NAN);
    Ok(json!({
        "triple": [t.m.to_string(), t.m1.to_string(), t.m2.to_string()],
        "lo": s.values.iter().map(|v| f(v.lo())).collect::<Vec<_>>(),
        "hi": s.values.iter().map(|v| f(v.hi())).collect::<Vec<_>>(),
        "running_min": s.running_min.iter().map(f).collect::<Vec<_>>(),
    }))
}

fn to_js(r: Result<Value>) -> std::result::Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn markoff_tree(depth: usize) -> std::result::Result<String, JsValue> {
    to_js(tree_json(depth))
}

#[wasm_bindgen]
pub fn extremal_number(spec: &str, steps: usize, digits: usize) -> std::result::Result<String, JsValue> {
    to_js(xi_json(spec, steps, digits))
}

#[wasm_bindgen]
pub fn lagrange_sequence(spec: &str, digits: usize) -> std::result::Result<String, JsValue> {
    to_js(nu_json(spec, digits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use markoff_lab::exactnum::rat;

    #[test]
    fn decimals() {
        assert_eq!(decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(decimal(&rat(-7, 2), 2), "-3.50");
        assert_eq!(decimal(&rat(5, 1), 0), "5.");
    }

    #[test]
    fn resolves_paths_and_triples() {
        assert_eq!(resolve("L").unwrap(), resolve("5,1,2").unwrap());
        assert_eq!(resolve("").unwrap(), MarkoffTriple::root());
        assert!(resolve("LX").is_err());
        assert!(resolve("5,2,2").is_err());
    }

    #[test]
    fn tree_counts() {
        let v = tree_json(3).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 16);
        assert!(tree_json(MAX_DEPTH + 1).is_err());
    }

    #[test]
    fn xi_digits_and_decimal() {
        let v = xi_json("L", 12, 8).unwrap();
        assert_eq!(v["digits"], "1,1,1,1,2,2,1,1");
        let d = v["decimal"].as_str().unwrap();
        assert!(d.len() > 10, "{d}");
        assert!(v["log10_width"].as_f64().unwrap() < -10.0);
    }

    #[test]
    fn nu_settles_near_a_third() {
        let v = nu_json("L", 200).unwrap();
        let last = v["running_min"].as_array().unwrap().last().unwrap().as_f64().unwrap();
        assert!((last - 1.0 / 3.0).abs() < 1e-2, "{last}");
    }
}
