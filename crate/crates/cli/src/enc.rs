//! Lossless JSON encodings: integers as numbers, rationals as `"p/q"`,
//! intervals as `{"lo", "hi"}`, words as digit strings.

use markoff_lab::exactnum::{format_rat, BinQuadForm, Mat2, QuadNum, RatInterval};
use markoff_lab::extremal::LogBand;
use markoff_lab::markoff::{CohnMatrix, MarkoffTriple, Side};
use markoff_lab::words::Word;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Number, Value};

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integers are valid JSON numbers"))
}

pub fn rat(x: &BigRational) -> Value {
    Value::String(format_rat(x))
}

pub fn interval(iv: &RatInterval) -> Value {
    json!({ "lo": rat(iv.lo()), "hi": rat(iv.hi()) })
}

pub fn log_band(b: &LogBand) -> Value {
    json!({ "log10_lo": b.lo, "log10_hi": b.hi })
}

pub fn path(t: &MarkoffTriple) -> String {
    t.path
        .iter()
        .map(|s| match s {
            Side::Left => 'L',
            Side::Right => 'R',
        })
        .collect()
}

pub fn triple(t: &MarkoffTriple) -> Value {
    Value::Array(t.entries().iter().map(|x| int(x)).collect())
}

pub fn triple_with_path(t: &MarkoffTriple) -> Value {
    json!({ "triple": triple(t), "path": path(t) })
}

pub fn mat(g: &Mat2) -> Value {
    json!([[int(&g.a), int(&g.b)], [int(&g.c), int(&g.d)]])
}

pub fn cohn(x: &CohnMatrix) -> Value {
    mat(&x.to_mat2())
}

pub fn form(f: &BinQuadForm) -> Value {
    json!({
        "coefficients": [int(&f.a), int(&f.b), int(&f.c)],
        "disc": int(&f.disc()),
        "display": f.to_string(),
    })
}

/// Exact value `(p + q√d)/r` with a short decimal approximation.
pub fn quad(x: &QuadNum) -> Value {
    json!({
        "exact": x.to_string(),
        "p": int(x.p()),
        "q": int(x.q()),
        "d": int(x.d()),
        "r": int(x.r()),
        "approx": x.to_f64(),
    })
}

pub fn word(w: &Word) -> Value {
    Value::String(w.to_string())
}
