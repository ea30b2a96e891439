use markoff_lab::contfrac::{is_reduced_quad, quad_cf_expand};
use markoff_lab::exactnum::{parse_rat, BinQuadForm};
use markoff_lab::extremal::{
    approx_diagnostics, associated_form_min, reduce_and_balance_auto, xi_enclosure, ExtremalSpec, BAND,
};
use markoff_lab::markoff::{cohn_matrix, cohn_node, locate, offdiag_congruence, tree, MarkoffTriple, ZigzagWalk};
use markoff_lab::spectrum::{
    l_periodic, l_window_sup, mu_exact, nu_quadratic, nu_sequence, Tail, WindowedBiWord, DEFAULT_MARGIN,
};
use markoff_lab::words::{pi_word, psi_for_triple, xi_word_stream, Word};
use markoff_lab::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::args::Format;
use crate::enc;

pub enum Output {
    Json(Value),
    Text(String),
}

pub fn parse_triple(s: &str) -> Result<MarkoffTriple> {
    let parts: Vec<BigInt> = s
        .split(',')
        .map(|p| p.trim().parse::<BigInt>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidInput(format!("triple must be m,m1,m2: {s:?}")))?;
    match parts.as_slice() {
        [m, m1, m2] => locate(m, m1, m2),
        _ => Err(Error::InvalidInput(format!("triple must be m,m1,m2: {s:?}"))),
    }
}

pub fn tree_cmd(depth: usize, format: Format) -> Result<Output> {
    let nodes = tree(depth);
    Ok(match format {
        Format::Csv | Format::Text => {
            let mut s = String::from("m,m1,m2,path\n");
            for t in &nodes {
                s.push_str(&format!("{},{},{},{}\n", t.m, t.m1, t.m2, enc::path(t)));
            }
            Output::Text(s)
        }
        Format::Json => Output::Json(json!({
            "depth": depth,
            "count": nodes.len(),
            "triples": nodes.iter().map(enc::triple_with_path).collect::<Vec<_>>(),
        })),
    })
}

pub fn zigzag_cmd(t: &MarkoffTriple, n: usize) -> Result<Output> {
    let nodes: Vec<Value> = ZigzagWalk::new(t)?
        .take(n)
        .map(|(t, x)| json!({ "triple": enc::triple(&t), "path": enc::path(&t), "matrix": enc::cohn(&x) }))
        .collect();
    Ok(Output::Json(json!({
        "start": enc::triple(t),
        "first_step": ZigzagWalk::first_side(t).letter().to_string(),
        "nodes": nodes,
    })))
}

pub fn cohn_cmd(t: &MarkoffTriple) -> Result<Output> {
    let x = cohn_matrix(t)?;
    let node = cohn_node(t).ok().map(|n| json!([enc::cohn(&n.x), enc::cohn(&n.x1), enc::cohn(&n.x2)]));
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "matrix": enc::cohn(&x),
        "det": enc::int(&x.det()),
        "k_from_congruence": enc::int(&offdiag_congruence(t)),
        "node": node,
    })))
}

pub fn form_cmd(t: &MarkoffTriple) -> Result<Output> {
    let f = cohn_matrix(t)?.form();
    Ok(Output::Json(json!({ "triple": enc::triple(t), "form": enc::form(&f) })))
}

pub fn alpha_cmd(t: &MarkoffTriple) -> Result<Output> {
    let (a, abar) = cohn_matrix(t)?.alpha();
    let e = quad_cf_expand(&a)?;
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "alpha": enc::quad(a.as_num()),
        "conjugate": enc::quad(abar.as_num()),
        "height": enc::int(&a.height()),
        "reduced": is_reduced_quad(&a),
        "expansion": e.to_string(),
        "period": enc::word(&e.period),
        "pi": enc::word(&pi_word(t)),
    })))
}

pub fn xi_cmd(
    t: &MarkoffTriple,
    digits: Option<usize>,
    precision: Option<&str>,
    format: Option<Format>,
) -> Result<Output> {
    let format = format.unwrap_or(if digits.is_some() && precision.is_none() { Format::Text } else { Format::Json });
    let w = digits.map(|n| xi_word_stream(t, n)).transpose()?;
    if format != Format::Json {
        let w = w.ok_or_else(|| Error::InvalidInput("text output needs --digits".into()))?;
        return Ok(Output::Text(format!("{}\n", w.to_comma_string())));
    }
    let width = parse_rat(precision.unwrap_or("1/10^30"))?;
    let e = xi_enclosure(t, &width)?;
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "psi": psi_for_triple(t).map(|p| p.to_string()).ok(),
        "digits": w.as_ref().map(enc::word),
        "enclosure": enc::interval(&e.interval),
        "zigzag_steps": e.last.steps,
        "word_enclosure": enc::interval(&e.last.word),
        "matrix_enclosure": enc::interval(&e.last.matrix),
    })))
}

pub fn conjugates_cmd(t: &MarkoffTriple, precision: &str, box_size: Option<u64>) -> Result<Output> {
    let width = parse_rat(precision)?;
    let c = markoff_lab::extremal::xi_conjugates(t, &width)?;
    let g = box_size.map(|b| associated_form_min(t, b, &width)).transpose()?;
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "xi": enc::interval(&c.xi),
        "xi_prime": { "value": enc::interval(&c.prime), "matrix": enc::mat(&c.prime_matrix) },
        "xi_double_prime": { "value": enc::interval(&c.double_prime), "matrix": enc::mat(&c.double_prime_matrix) },
        "g_form": "(T - xi U)(T - (xi + 3) U)",
        "g_min": g.map(|iv| json!({ "box": box_size, "value": enc::interval(&iv) })),
    })))
}

pub fn spectrum_l_cmd(t: &MarkoffTriple, window: Option<usize>) -> Result<Output> {
    let pi = pi_word(t);
    let l = l_periodic(&pi)?;
    let critical = match window {
        Some(n) if !t.is_degenerate() => {
            let p = xi_word_stream(t, n)?;
            let mut out = Vec::new();
            for mid in ["2211", "1122"] {
                let mid: Word = mid.parse()?;
                let w = WindowedBiWord::new(p.reversed().concat(&mid).concat(&p).0);
                let ws = l_window_sup(&w, DEFAULT_MARGIN)?;
                let max_hi = ws.positions.iter().map(|(_, iv)| iv.hi()).max().cloned();
                out.push(json!({
                    "middle": mid.to_string(),
                    "length": w.len(),
                    "margin": DEFAULT_MARGIN,
                    "lower_bound": enc::rat(&ws.lower),
                    "max_upper_endpoint": max_hi.as_ref().map(enc::rat),
                }));
            }
            Some(out)
        }
        _ => None,
    };
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "period": enc::word(&pi),
        "L": enc::quad(&l.exact),
        "L_enclosure": enc::interval(&l.enclosure),
        "critical_windows": critical,
    })))
}

pub fn mu_cmd(t: &MarkoffTriple, box_size: Option<u64>) -> Result<Output> {
    let f = cohn_matrix(t)?.form();
    let mu = mu_exact(&f)?;
    let brute = box_size.map(|b| brute_min(&f, b as i64));
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "form": enc::form(&f),
        "mu": enc::int(&mu),
        "content": enc::int(&f.content()),
        "brute_force": brute.map(|(v, p)| json!({ "box": box_size, "min": enc::int(&v), "at": [p.0, p.1] })),
    })))
}

/// `min |F|` over the nonzero points of `[−b, b]²`, and where it occurs.
pub fn brute_min(f: &BinQuadForm, b: i64) -> (BigInt, (i64, i64)) {
    let mut best: Option<(BigInt, (i64, i64))> = None;
    for u in 0..=b {
        for t in -b..=b {
            if u == 0 && t <= 0 {
                continue;
            }
            let v = f.eval(&BigInt::from(t), &BigInt::from(u)).abs();
            if best.as_ref().is_none_or(|(m, _)| &v < m) {
                best = Some((v, (t, u)));
            }
        }
    }
    best.expect("the box has nonzero points")
}

pub fn nu_cmd(t: &MarkoffTriple, digits: usize, format: Format) -> Result<Output> {
    let w = xi_word_stream(t, digits)?;
    let s = nu_sequence(&w, &Tail::Unknown)?;
    if format != Format::Json {
        let mut out = String::from("k,lo,hi,running_min\n");
        for (k, (v, m)) in s.values.iter().zip(&s.running_min).enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                k + 1,
                markoff_lab::exactnum::rat_to_f64(v.lo()),
                markoff_lab::exactnum::rat_to_f64(v.hi()),
                markoff_lab::exactnum::rat_to_f64(m)
            ));
        }
        return Ok(Output::Text(out));
    }
    let nu_alpha = nu_quadratic(&cohn_matrix(t)?.alpha().0)?;
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "digits": digits,
        "nu_alpha": enc::quad(&nu_alpha),
        "running_min": s.running_min.last().map(enc::rat),
        "values": s.values.iter().map(enc::interval).collect::<Vec<_>>(),
    })))
}

pub fn diagnostics_cmd(t: &MarkoffTriple, to: usize) -> Result<Output> {
    if to < 4 {
        return Err(Error::InvalidInput("diagnostics run over i = 4 ..= depth with depth ≥ 4".into()));
    }
    let rows = approx_diagnostics(t, 4, to)?;
    Ok(Output::Json(json!({
        "triple": enc::triple(t),
        "band": [BAND.0, BAND.1],
        "rows": rows.iter().map(|r| json!({
            "i": r.approx.i,
            "node": enc::triple(&r.approx.node),
            "kind": r.approx.kind.to_string(),
            "alpha": r.approx.alpha.to_string(),
            "height": enc::int(&r.height),
            "distance": enc::log_band(&r.distance),
            "approx_ratio": enc::log_band(&r.approx_ratio),
            "conjugate_shift": r.conjugate_shift,
            "conjugate_ratio": enc::log_band(&r.conjugate_ratio),
            "product_ratio": enc::log_band(&r.product_ratio),
            "growth_ratio": enc::log_band(&r.growth_ratio),
            "within_band": r.within(BAND),
        })).collect::<Vec<_>>(),
    })))
}

pub fn spec_json(s: &ExtremalSpec) -> Value {
    json!({ "triple": enc::triple(&s.triple), "moebius": enc::mat(&s.moebius) })
}

pub fn balance_cmd(t: &MarkoffTriple, precision: &str) -> Result<Output> {
    let width = parse_rat(precision)?;
    let b = reduce_and_balance_auto(&ExtremalSpec::new(t), &width)?;
    let xi = xi_enclosure(t, &width)?.interval;
    let e = b.enclose(&xi)?;
    Ok(Output::Json(json!({
        "spec": spec_json(&b),
        "value": enc::interval(&e.value),
        "conjugates": [enc::interval(&e.prime), enc::interval(&e.double_prime)],
        "reduced": e.is_reduced(),
        "balanced": e.is_balanced(),
    })))
}
