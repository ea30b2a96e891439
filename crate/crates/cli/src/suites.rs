//! Named verification suites. Every check carries an anchor naming the
//! statement it tests; `docs/checks.md` indexes the anchors.

use std::fmt;

use markoff_lab::contfrac::{is_reduced_quad, quad_digits};
use markoff_lab::exactnum::{rat, Mat2, QuadNum};
use markoff_lab::extremal::{
    approx_diagnostics, associated_form_min, best_approx_determinant, best_approx_range, extremality_witness,
    reduce_and_balance, witness_gap_points, xi_enclosure, ExtremalSpec, XiRefiner, BAND,
};
use markoff_lab::markoff::{
    cohn_matrix, cohn_tree, extended_tree, fricke_check, is_markoff, locate, offdiag_congruence, pairwise_coprime,
    tree, CohnMatrix, CohnNode, MarkoffTriple, ZigzagWalk,
};
use markoff_lab::spectrum::{
    l_periodic, l_window_sup, mu_exact, nu_quadratic, nu_sequence, Tail, WindowedBiWord, DEFAULT_MARGIN,
};
use markoff_lab::words::{cube_prefixes, palindrome_factor, phi, pi_word, psi_for_triple, xi_word_stream, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::commands::{brute_min, spec_json};
use crate::enc;

pub const SUITES: [&str; 14] = [
    "tree",
    "cohn",
    "congruence",
    "fricke",
    "words",
    "periods",
    "mu",
    "nu-quadratic",
    "xi-dual",
    "xi-nu",
    "g-min",
    "diagnostics",
    "balance",
    "cubes",
];

/// Maximum number of failures quoted in a witness.
const MAX_QUOTED: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {:?}; expected one of {} or all", self.0, SUITES.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub id: String,
    pub anchor: &'static str,
    pub pass: bool,
    pub witness: Value,
}

impl Check {
    fn new(id: &str, anchor: &'static str, pass: bool, witness: Value) -> Self {
        Check { id: id.to_string(), anchor, pass, witness }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "anchor": self.anchor,
            "status": if self.pass { "pass" } else { "fail" },
            "witness": self.witness,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub depth: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        let failed = self.failures().count();
        json!({
            "suite": self.suite,
            "depth": self.depth,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "totals": { "checks": self.checks.len(), "passed": self.checks.len() - failed, "failed": failed },
        })
    }

    pub fn to_text(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{} {} [{}]\n", if c.pass { "PASS" } else { "FAIL" }, c.id, c.anchor))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub depth: usize,
    /// Corrupts the first Cohn matrix checked by the `cohn` suite.
    pub inject_fault: bool,
}

pub fn verify(suite: &str, opts: &Options) -> Result<SuiteReport, UnknownSuite> {
    let mut checks = if suite == "all" {
        SUITES.par_iter().flat_map(|s| run_suite(s, opts).expect("listed suites exist")).collect()
    } else {
        run_suite(suite, opts)?
    };
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(SuiteReport { suite: suite.to_string(), depth: opts.depth, checks })
}

fn run_suite(suite: &str, o: &Options) -> Result<Vec<Check>, UnknownSuite> {
    Ok(match suite {
        "tree" => tree_suite(o.depth),
        "cohn" => cohn_suite(o.depth, o.inject_fault),
        "congruence" => congruence_suite(o.depth),
        "fricke" => fricke_suite(o.depth),
        "words" => words_suite(o.depth.min(8)),
        "periods" => periods_suite(o.depth.min(8)),
        "mu" => mu_suite(o.depth.min(6)),
        "nu-quadratic" => nu_quadratic_suite(o.depth.min(6)),
        "xi-dual" => xi_dual_suite(),
        "xi-nu" => xi_nu_suite(),
        "g-min" => g_min_suite(),
        "diagnostics" => diagnostics_suite(),
        "balance" => balance_suite(),
        "cubes" => cubes_suite(),
        other => return Err(UnknownSuite(other.to_string())),
    })
}

/// Runs `f` on every item in parallel; the witness counts the items and
/// quotes the first few failures in input order.
fn check_all<T, F>(id: &str, anchor: &'static str, items: &[T], f: F) -> Check
where
    T: Sync,
    F: Fn(&T) -> Result<(), Value> + Sync,
{
    let failures: Vec<Value> = items.par_iter().filter_map(|x| f(x).err()).collect();
    let witness = json!({
        "checked": items.len(),
        "failed": failures.len(),
        "failures": failures.iter().take(MAX_QUOTED).collect::<Vec<_>>(),
    });
    Check::new(id, anchor, failures.is_empty(), witness)
}

fn ensure(ok: bool, w: impl FnOnce() -> Value) -> Result<(), Value> {
    if ok {
        Ok(())
    } else {
        Err(w())
    }
}

fn err_json(e: markoff_lab::Error) -> Value {
    json!({ "error": e.to_string() })
}

fn named(m: i64, m1: i64, m2: i64) -> MarkoffTriple {
    locate(&BigInt::from(m), &BigInt::from(m1), &BigInt::from(m2)).expect("fixed triples are tree nodes")
}

/// Ten distinct triples of depth at most three below the root.
fn ten_triples() -> Vec<MarkoffTriple> {
    let mut v = vec![MarkoffTriple::root()];
    v.extend(tree(3).into_iter().take(9));
    v
}

fn three_triples() -> Vec<MarkoffTriple> {
    vec![MarkoffTriple::base(), MarkoffTriple::root(), named(29, 5, 2)]
}

fn five_triples() -> Vec<MarkoffTriple> {
    vec![MarkoffTriple::root(), MarkoffTriple::base(), named(13, 1, 5), named(29, 5, 2), named(194, 13, 5)]
}

fn tree_suite(depth: usize) -> Vec<Check> {
    let nodes = tree(depth);
    let ext = extended_tree(depth);
    let expected = (1usize << (depth + 1)) - 1;
    vec![
        Check::new(
            "tree.count",
            "markoff-tree",
            nodes.len() == expected,
            json!({ "depth": depth, "nodes": nodes.len(), "expected": expected }),
        ),
        check_all("tree.equation", "markoff-equation", &ext, |t| {
            ensure(is_markoff(&t.m, &t.m1, &t.m2), || enc::triple(t))
        }),
        check_all("tree.largest-entry", "markoff-tree", &ext, |t| ensure(t.m > t.m1 && t.m > t.m2, || enc::triple(t))),
        check_all("tree.coprime", "markoff-coprimality", &ext, |t| ensure(pairwise_coprime(t), || enc::triple(t))),
        check_all("tree.locate", "markoff-tree", &ext, |t| {
            ensure(locate(&t.m, &t.m1, &t.m2).as_ref() == Ok(t), || enc::triple_with_path(t))
        }),
    ]
}

fn corrupt(n: &CohnNode) -> CohnNode {
    let mut n = n.clone();
    n.x.k += 1u32;
    n
}

fn cohn_suite(depth: usize, inject_fault: bool) -> Vec<Check> {
    let mut nodes = cohn_tree(depth);
    if inject_fault {
        nodes[0].1 = corrupt(&nodes[0].1);
    }
    let mut matrices: Vec<(MarkoffTriple, CohnMatrix)> = vec![(MarkoffTriple::root(), CohnMatrix::of_root())];
    matrices.extend(nodes.iter().map(|(t, n)| (t.clone(), n.x.clone())));
    let witness = |t: &MarkoffTriple, x: &CohnMatrix| json!({ "triple": enc::triple(t), "matrix": enc::cohn(x) });
    vec![
        check_all("cohn.symmetric-unimodular", "cohn-matrix-tree", &matrices, |(t, x)| {
            ensure(x.to_mat2().is_symmetric() && x.det().is_one(), || witness(t, x))
        }),
        check_all("cohn.bounds", "cohn-matrix-bounds", &matrices, |(t, x)| {
            ensure(x.satisfies_bounds(), || witness(t, x))
        }),
        check_all("cohn.upper-left", "cohn-matrix-tree", &nodes, |(t, n)| {
            ensure(n.x.m == t.m && n.x1.m == t.m1 && n.x2.m == t.m2, || witness(t, &n.x))
        }),
        check_all("cohn.product", "cohn-matrix-tree", &nodes, |(t, n)| {
            ensure(n.is_consistent(), || {
                json!({
                    "triple": enc::triple(t),
                    "x": enc::cohn(&n.x),
                    "x1": enc::cohn(&n.x1),
                    "x2": enc::cohn(&n.x2),
                })
            })
        }),
    ]
}

fn congruence_suite(depth: usize) -> Vec<Check> {
    let ext = extended_tree(depth);
    vec![check_all("congruence.offdiagonal", "offdiagonal-congruence", &ext, |t| {
        let x = cohn_matrix(t).map_err(err_json)?;
        let k = offdiag_congruence(t);
        ensure(k == x.k, || json!({ "triple": enc::triple(t), "k": enc::int(&x.k), "congruence": enc::int(&k) }))
    })]
}

fn fricke_suite(depth: usize) -> Vec<Check> {
    let mut starts = vec![MarkoffTriple::root()];
    starts.extend(tree(depth.min(5)).into_iter().take(9));
    vec![check_all("fricke.zigzag-windows", "fricke-trace-identity", &starts, |t| {
        let xs: Vec<CohnMatrix> = ZigzagWalk::new(t).map_err(err_json)?.take(20).map(|(_, x)| x).collect();
        for (i, w) in xs.windows(3).enumerate() {
            let w = [w[0].clone(), w[1].clone(), w[2].clone()];
            if !fricke_check(&w) {
                return Err(json!({ "start": enc::triple(t), "window": i }));
            }
        }
        Ok(())
    })]
}

fn words_suite(depth: usize) -> Vec<Check> {
    let mut ts = vec![MarkoffTriple::degenerate()];
    ts.extend(extended_tree(depth));
    let below: Vec<MarkoffTriple> = ts.iter().filter(|t| !t.is_root() && !t.is_degenerate()).cloned().collect();
    vec![
        check_all("words.phi-of-pi", "word-law", &ts, |t| {
            let x = cohn_matrix(t).map_err(err_json)?;
            let lhs = phi(&pi_word(t));
            let rhs = &x.to_mat2() * &Mat2::markoff_m();
            ensure(lhs == rhs, || json!({ "triple": enc::triple(t), "phi": enc::mat(&lhs), "xM": enc::mat(&rhs) }))
        }),
        check_all("words.palindrome", "palindromic-factor", &below, |t| {
            let psi = psi_for_triple(t).map_err(err_json)?;
            palindrome_factor(&psi).map(|_| ()).map_err(err_json)
        }),
    ]
}

fn periods_suite(depth: usize) -> Vec<Check> {
    let mut ts = vec![MarkoffTriple::degenerate()];
    ts.extend(extended_tree(depth));
    vec![
        check_all("periods.alpha-digits", "alpha-period", &ts, |t| {
            let (a, _) = cohn_matrix(t).map_err(err_json)?.alpha();
            let pi = pi_word(t);
            let n = 3 * pi.len();
            let (a0, w) = quad_digits(a.as_num(), n).map_err(err_json)?;
            ensure(
                a0 == BigInt::from(0) && w == pi.repeat(3),
                || json!({ "triple": enc::triple(t), "digits": enc::word(&w), "pi": enc::word(&pi) }),
            )
        }),
        check_all("periods.alpha-reduced", "alpha-period", &ts, |t| {
            let (a, _) = cohn_matrix(t).map_err(err_json)?.alpha();
            ensure(is_reduced_quad(&a), || json!({ "triple": enc::triple(t), "alpha": a.to_string() }))
        }),
    ]
}

fn mu_suite(depth: usize) -> Vec<Check> {
    let ext = extended_tree(depth);
    let small = extended_tree(depth.min(3));
    vec![
        check_all("mu.markoff-value", "markoff-value", &ext, |t| {
            let f = cohn_matrix(t).map_err(err_json)?.form();
            let mu = mu_exact(&f).map_err(err_json)?;
            // μ/√disc = 1/√(9 − 4m⁻²), cross-multiplied
            let m2 = &t.m * &t.m;
            let lhs = &mu * &mu * (&m2 * 9u32 - 4u32);
            let rhs = &m2 * f.disc();
            ensure(mu == t.m && lhs == rhs, || json!({ "triple": enc::triple(t), "mu": enc::int(&mu) }))
        }),
        check_all("mu.brute-force", "markoff-value", &small, |t| {
            let f = cohn_matrix(t).map_err(err_json)?.form();
            let mu = mu_exact(&f).map_err(err_json)?;
            let (b, at) = brute_min(&f, 100);
            ensure(
                b == mu,
                || json!({ "triple": enc::triple(t), "mu": enc::int(&mu), "box_min": enc::int(&b), "at": [at.0, at.1] }),
            )
        }),
    ]
}

fn nu_quadratic_suite(depth: usize) -> Vec<Check> {
    let ext = extended_tree(depth);
    vec![
        check_all("nu-quadratic.reciprocity", "lagrange-reciprocity", &ext, |t| {
            let (a, _) = cohn_matrix(t).map_err(err_json)?.alpha();
            let l = l_periodic(&pi_word(t)).map_err(err_json)?;
            let nu = nu_quadratic(&a).map_err(err_json)?;
            let p = l.exact.mul(&nu).map_err(err_json)?;
            ensure(
                p == QuadNum::from_int(BigInt::one()),
                || json!({ "triple": enc::triple(t), "L": l.exact.to_string(), "nu": nu.to_string() }),
            )
        }),
        check_all("nu-quadratic.markoff-value", "markoff-value", &ext, |t| {
            let (a, _) = cohn_matrix(t).map_err(err_json)?.alpha();
            let nu = nu_quadratic(&a).map_err(err_json)?;
            let sq = nu.mul(&nu).map_err(err_json)?.to_rat();
            let m2 = &t.m * &t.m;
            let want = BigRational::new(m2.clone(), &m2 * 9u32 - 4u32);
            ensure(
                sq == Some(want) && nu.signum().is_gt(),
                || json!({ "triple": enc::triple(t), "nu": nu.to_string() }),
            )
        }),
    ]
}

/// Zigzag steps allowed to reach width `10⁻⁶⁰`.
pub const XI_MAX_STEPS: usize = 14;

fn xi_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(60))
}

fn xi_dual_suite() -> Vec<Check> {
    let ts = ten_triples();
    vec![
        check_all("xi-dual.intersect", "xi-dual-construction", &ts, |t| {
            let r = XiRefiner::new(t).map_err(err_json)?;
            for level in r.take_while(|r| !matches!(r, Ok(r) if r.steps > XI_MAX_STEPS)) {
                level.map_err(|e| json!({ "triple": enc::triple(t), "error": e.to_string() }))?;
            }
            Ok(())
        }),
        check_all("xi-dual.width", "xi-dual-construction", &ts, |t| {
            let e = xi_enclosure(t, &xi_width()).map_err(err_json)?;
            ensure(e.last.steps <= XI_MAX_STEPS, || json!({ "triple": enc::triple(t), "steps": e.last.steps }))
        }),
    ]
}

pub const NU_DIGITS: usize = 300;

fn third() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(3))
}

fn xi_nu_suite() -> Vec<Check> {
    let ts = vec![MarkoffTriple::base(), MarkoffTriple::root()];
    let lo = third() - rat(1, 100);
    let hi = third() + rat(2, 100);
    let near = rat(1, 1000);
    let p = xi_word_stream(&MarkoffTriple::base(), NU_DIGITS).expect("stream of (5,1,2)");
    let windows: Vec<Word> = ["2211", "1122"].iter().map(|m| m.parse().unwrap()).collect();
    vec![
        check_all("xi-nu.running-min", "lagrange-constant-one-third", &ts, |t| {
            let w = xi_word_stream(t, NU_DIGITS + 1).map_err(err_json)?;
            let s = nu_sequence(&w, &Tail::Unknown).map_err(err_json)?;
            let last = s.running_min.last().expect("nonempty").clone();
            let close = s.values.iter().filter(|v| v.lo() > &(third() - &near) && v.hi() < &(third() + &near)).count();
            ensure(
                last > lo && last < hi && close >= 5,
                || json!({ "triple": enc::triple(t), "running_min": enc::rat(&last), "within_1e-3": close }),
            )
        }),
        check_all("xi-nu.critical-window", "critical-words", &windows, |mid| {
            let w = WindowedBiWord::new(p.reversed().concat(mid).concat(&p).0);
            let ws = l_window_sup(&w, DEFAULT_MARGIN).map_err(err_json)?;
            let cap = rat(3, 1) + rat(1, 1000);
            let max_hi = ws.positions.iter().map(|(_, iv)| iv.hi().clone()).max().expect("positions");
            ensure(
                max_hi <= cap && ws.lower > rat(299, 100),
                || json!({ "middle": mid.to_string(), "lower": enc::rat(&ws.lower), "max_upper": enc::rat(&max_hi) }),
            )
        }),
    ]
}

pub const G_BOX: u64 = 50;

fn g_min_suite() -> Vec<Check> {
    let ts = three_triples();
    let width = BigRational::new(BigInt::one(), BigInt::from(10).pow(30));
    vec![check_all("g-min.box", "associated-form-minimum", &ts, |t| {
        let g = associated_form_min(t, G_BOX, &width).map_err(err_json)?;
        ensure(
            g.lo() > &rat(99, 100) && g.hi() < &rat(1001, 1000),
            || json!({ "triple": enc::triple(t), "min": enc::interval(&g) }),
        )
    })]
}

fn diagnostics_suite() -> Vec<Check> {
    let ts = three_triples();
    let base = MarkoffTriple::base();
    vec![
        check_all("diagnostics.best-approx-nu", "best-approximations", &ts, |t| {
            for b in best_approx_range(t, 1, 10).map_err(err_json)? {
                let nu = nu_quadratic(&b.alpha).map_err(err_json)?;
                let n2 = &b.node.m * &b.node.m;
                let want = BigRational::new(n2.clone(), &n2 * 9u32 - 4u32);
                let sq = nu.mul(&nu).map_err(err_json)?.to_rat();
                let above = nu.cmp_rat(&third()).is_gt();
                if !above || sq != Some(want) {
                    return Err(json!({ "triple": enc::triple(t), "i": b.i, "nu": nu.to_string() }));
                }
            }
            Ok(())
        }),
        check_all("diagnostics.determinant-form", "best-approximations", &ts, |t| {
            for b in best_approx_range(t, 1, 10).map_err(err_json)? {
                let d = best_approx_determinant(t, b.i).map_err(err_json)?;
                if d != b.alpha {
                    return Err(
                        json!({ "triple": enc::triple(t), "i": b.i, "closed": b.alpha.to_string(), "determinant": d.to_string() }),
                    );
                }
            }
            Ok(())
        }),
        {
            let rows = approx_diagnostics(&base, 4, 12);
            match rows {
                Ok(rows) => check_all("diagnostics.exponent-bands", "exponent-bands", &rows, |r| {
                    ensure(r.within(BAND), || {
                        json!({
                            "i": r.approx.i,
                            "approx": enc::log_band(&r.approx_ratio),
                            "conjugate": enc::log_band(&r.conjugate_ratio),
                            "product": enc::log_band(&r.product_ratio),
                            "growth": enc::log_band(&r.growth_ratio),
                        })
                    })
                }),
                Err(e) => Check::new("diagnostics.exponent-bands", "exponent-bands", false, err_json(e)),
            }
        },
        {
            let rows = witness_gap_points(&base, 4, 12).and_then(|xs| extremality_witness(&base, &xs));
            match rows {
                Ok(rows) => check_all("diagnostics.extremality-products", "extremality", &rows, |r| {
                    ensure(
                        r.product.within(BAND),
                        || json!({ "X": enc::int(&r.x), "product": enc::log_band(&r.product) }),
                    )
                }),
                Err(e) => Check::new("diagnostics.extremality-products", "extremality", false, err_json(e)),
            }
        },
    ]
}

fn balance_suite() -> Vec<Check> {
    let ts = five_triples();
    let width = BigRational::new(BigInt::one(), BigInt::from(10).pow(60));
    let moves = [Mat2::translation(7), Mat2::new(-1, 1, 0, 1)];
    vec![check_all("balance.unique", "balanced-representative", &ts, |t| {
        let spec = ExtremalSpec::new(t);
        let b = reduce_and_balance(&spec, &width).map_err(err_json)?;
        let xi = xi_enclosure(t, &width).map_err(err_json)?.interval;
        let e = b.enclose(&xi).map_err(err_json)?;
        let again = reduce_and_balance(&b, &width).map_err(err_json)?;
        let others: Vec<ExtremalSpec> = moves
            .iter()
            .map(|g| reduce_and_balance(&spec.transformed(g), &width))
            .collect::<Result<_, _>>()
            .map_err(err_json)?;
        let same = others.iter().all(|o| o == &b);
        ensure(e.is_balanced() && again == b && same, || {
            json!({
                "spec": spec_json(&b),
                "balanced": e.is_balanced(),
                "idempotent": again == b,
                "translates": others.iter().map(spec_json).collect::<Vec<_>>(),
            })
        })
    })]
}

fn cubes_suite() -> Vec<Check> {
    let run = || -> markoff_lab::Result<(Vec<Word>, Vec<Word>)> {
        let p = xi_word_stream(&MarkoffTriple::base(), 600)?;
        Ok((cube_prefixes(&p.prefix(300)), cube_prefixes(&p)))
    };
    vec![match run() {
        Ok((a, b)) => Check::new(
            "cubes.stable",
            "cube-prefixes",
            a == b,
            json!({
                "at_300": a.iter().map(enc::word).collect::<Vec<_>>(),
                "at_600": b.iter().map(enc::word).collect::<Vec<_>>(),
            }),
        ),
        Err(e) => Check::new("cubes.stable", "cube-prefixes", false, err_json(e)),
    }]
}
