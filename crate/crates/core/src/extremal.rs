//! The extremal numbers `ξ_m`: certified enclosures built two ways, their
//! conjugates `ξ_m ± 3`, the associated form `G_m`, best quadratic
//! approximations with exponent diagnostics, and reduction to the unique
//! balanced representative of a `GL₂(ℤ)` orbit.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::contfrac::prefix_interval;
use crate::error::{Error, Result};
use crate::exactnum::{ceil_rat, floor_rat, BinQuadForm, Mat2, QuadIrr, QuadNum, RatInterval};
use crate::markoff::{CohnMatrix, MarkoffTriple, Side, ZigzagWalk};
use crate::words::StreamPrefixes;

/// `γ = (1 + √5)/2`.
pub const GAMMA: f64 = 1.618_033_988_749_895;
/// Default band for the bounded-ratio diagnostics.
pub const BAND: (f64, f64) = (1e-3, 1e3);
/// Zigzag length beyond which refinement gives up.
pub const MAX_ZIGZAG_STEPS: usize = 40;

/// One refinement level of the two constructions of `ξ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    /// 1-based position of the zigzag node used.
    pub steps: usize,
    pub node: MarkoffTriple,
    pub digits: usize,
    /// Enclosure from the digit-stream prefix.
    pub word: RatInterval,
    /// Enclosure from the entries of the zigzag matrix.
    pub matrix: RatInterval,
}

impl Refinement {
    pub fn intersection(&self) -> Option<RatInterval> {
        self.word.intersect(&self.matrix)
    }
}

/// `ξ` lies between `(3k − l)/(3m − k)` and `(4k − l)/(4m − k)` whenever
/// `φ(Π) = x·M` and `Π` begins the expansion of `ξ` after the `0`.
pub fn matrix_bracket(x: &CohnMatrix) -> RatInterval {
    let lo = BigRational::new(&x.k * 3u32 - &x.l, &x.m * 3u32 - &x.k);
    let hi = BigRational::new(&x.k * 4u32 - &x.l, &x.m * 4u32 - &x.k);
    RatInterval::hull_of(lo, hi)
}

/// Successive refinements of `ξ_t`: level `i` uses the zigzag node of
/// index `2i + r` and the stream prefix `(ab)^((VU)^i ψ)`.
pub struct XiRefiner {
    nodes: std::iter::StepBy<std::iter::Skip<ZigzagWalk>>,
    prefixes: StreamPrefixes,
    offset: usize,
    level: usize,
}

impl XiRefiner {
    pub fn new(t: &MarkoffTriple) -> Result<Self> {
        let offset = match ZigzagWalk::first_side(t) {
            Side::Right => 1,
            Side::Left => 2,
        };
        Ok(XiRefiner {
            nodes: ZigzagWalk::new(t)?.skip(offset - 1).step_by(2),
            prefixes: StreamPrefixes::new(t)?,
            offset,
            level: 0,
        })
    }
}

impl Iterator for XiRefiner {
    type Item = Result<Refinement>;

    fn next(&mut self) -> Option<Self::Item> {
        let steps = self.offset + 2 * self.level;
        if steps > MAX_ZIGZAG_STEPS {
            return Some(Err(Error::PrecisionExhausted));
        }
        let (node, x) = self.nodes.next()?;
        let pi = self.prefixes.next()?.expand();
        self.level += 1;
        let r = Refinement {
            steps,
            node,
            digits: pi.len(),
            word: prefix_interval(&pi.0, &BigInt::zero()),
            matrix: matrix_bracket(&x),
        };
        if r.intersection().is_none() {
            return Some(Err(Error::MethodDisagreement(format!(
                "at {}: digits give {}, matrix gives {}",
                r.node, r.word, r.matrix
            ))));
        }
        Some(Ok(r))
    }
}

/// Certified enclosure of `ξ_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiEnclosure {
    pub interval: RatInterval,
    pub last: Refinement,
}

/// Intersection of both enclosures, refined until its width is at most `width`.
pub fn xi_enclosure(t: &MarkoffTriple, width: &BigRational) -> Result<XiEnclosure> {
    xi_enclosure_until(t, |r, iv| iv.width() <= *width && r.steps >= 1)
}

/// Like [`xi_enclosure`], stopping at the first zigzag index `≥ steps`.
pub fn xi_enclosure_steps(t: &MarkoffTriple, steps: usize) -> Result<XiEnclosure> {
    xi_enclosure_until(t, |r, _| r.steps >= steps)
}

fn xi_enclosure_until(t: &MarkoffTriple, done: impl Fn(&Refinement, &RatInterval) -> bool) -> Result<XiEnclosure> {
    for r in XiRefiner::new(t)? {
        let r = r?;
        let iv = r.intersection().expect("checked by the refiner");
        if done(&r, &iv) {
            return Ok(XiEnclosure { interval: iv, last: r });
        }
    }
    Err(Error::PrecisionExhausted)
}

/// `ξ' = N·ξ = ξ + 3` and `ξ'' = N⁻¹·ξ = ξ − 3` with `N = (1 3; 0 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatePair {
    pub xi: RatInterval,
    pub prime: RatInterval,
    pub double_prime: RatInterval,
    pub prime_matrix: Mat2,
    pub double_prime_matrix: Mat2,
}

pub fn xi_conjugates(t: &MarkoffTriple, width: &BigRational) -> Result<ConjugatePair> {
    let xi = xi_enclosure(t, width)?.interval;
    Ok(conjugates_of(&xi))
}

pub fn conjugates_of(xi: &RatInterval) -> ConjugatePair {
    let n = Mat2::translation(3);
    let n_inv = Mat2::translation(-3);
    ConjugatePair {
        xi: xi.clone(),
        prime: n.apply_interval(xi).expect("translations have no pole"),
        double_prime: n_inv.apply_interval(xi).expect("translations have no pole"),
        prime_matrix: n,
        double_prime_matrix: n_inv,
    }
}

/// `G_m(U, T) = (T − ξU)(T − (ξ + 3)U)` evaluated on an enclosure of `ξ`.
pub fn g_form_eval(xi: &RatInterval, u: &BigInt, t: &BigInt) -> RatInterval {
    let tu = RatInterval::from_int(t.clone());
    let xu = xi.scale(&BigRational::from_integer(u.clone()));
    let f1 = tu.sub(&xu);
    let f2 = f1.add_int(&-(u * 3u32));
    f1.mul(&f2)
}

/// Certified enclosure of `min |G_m(x, y)|` over nonzero `|x|, |y| ≤ B`.
///
/// For fixed `U = u ≠ 0` the minimum over `T` sits at an integer next to
/// one of the roots `ξu` and `(ξ + 3)u`, clipped to the box.
pub fn associated_form_min(t: &MarkoffTriple, b: u64, precision: &BigRational) -> Result<RatInterval> {
    if b == 0 {
        return Err(Error::InvalidInput("box size must be at least 1".into()));
    }
    let xi = xi_enclosure(t, precision)?.interval;
    Ok(g_box_min(&xi, b))
}

/// The box minimum for a given enclosure of `ξ`.
pub fn g_box_min(xi: &RatInterval, b: u64) -> RatInterval {
    let bb = BigInt::from(b);
    // U = 0 gives T², minimal at T = ±1
    let mut lo = BigRational::one();
    let mut hi = BigRational::one();
    for u in 1..=b {
        let u = BigInt::from(u);
        let mut cands: Vec<BigInt> = vec![bb.clone(), -bb.clone()];
        for shift in [0u32, 3] {
            let root = xi.add_int(&BigInt::from(shift)).scale(&BigRational::from_integer(u.clone()));
            let from = floor_rat(root.lo()) - 1u32;
            let to = ceil_rat(root.hi()) + 1u32;
            let mut y = from;
            while y <= to {
                if y.abs() <= bb {
                    cands.push(y.clone());
                }
                y += 1u32;
            }
        }
        for y in cands {
            let v = g_form_eval(xi, &u, &y).abs();
            if v.lo() < &lo {
                lo = v.lo().clone();
            }
            if v.hi() < &hi {
                hi = v.hi().clone();
            }
        }
    }
    RatInterval::new(lo, hi).expect("lower bounds stay below upper bounds")
}

/// Which closed form a best approximation takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxKind {
    /// `α_n` for the zigzag node `n`; its conjugate tends to `ξ − 3`.
    Alpha,
    /// `ᾱ_n + 3`; its conjugate tends to `ξ + 3`.
    ConjPlusThree,
}

impl fmt::Display for ApproxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ApproxKind::Alpha => "alpha",
            ApproxKind::ConjPlusThree => "conj-alpha+3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BestApprox {
    pub i: usize,
    pub node: MarkoffTriple,
    pub matrix: CohnMatrix,
    pub kind: ApproxKind,
    pub alpha: QuadIrr,
}

/// The `i`-th best quadratic approximation (`i ≥ 1`) to `ξ_t`: `α_n` when
/// `i ≡ r (mod 2)` and `ᾱ_n + 3` otherwise, `n` the `i`-th zigzag node and
/// `r = 1` exactly when the zigzag starts to the right.
pub fn best_approx(t: &MarkoffTriple, i: usize) -> Result<QuadIrr> {
    Ok(best_approx_detail(t, i)?.alpha)
}

pub fn best_approx_detail(t: &MarkoffTriple, i: usize) -> Result<BestApprox> {
    best_approx_range(t, i, i).map(|mut v| v.pop().expect("one entry"))
}

/// Best approximations `i = from..=to`, sharing one zigzag walk.
pub fn best_approx_range(t: &MarkoffTriple, from: usize, to: usize) -> Result<Vec<BestApprox>> {
    if from == 0 || to < from {
        return Err(Error::Degenerate(format!("best approximations are indexed from 1, got {from}..={to}")));
    }
    let r = match ZigzagWalk::first_side(t) {
        Side::Right => 1,
        Side::Left => 0,
    };
    ZigzagWalk::new(t)?
        .enumerate()
        .skip(from - 1)
        .take(to - from + 1)
        .map(|(j, (node, x))| {
            let i = j + 1;
            let (a, abar) = x.alpha();
            let (kind, alpha) = if i % 2 == r {
                (ApproxKind::Alpha, a)
            } else {
                (ApproxKind::ConjPlusThree, abar.add_int(&BigInt::from(3)))
            };
            Ok(BestApprox { i, node, matrix: x, kind, alpha })
        })
        .collect()
}

/// `F_i = A T² + B TU + C U²` from the determinant of `(U², UT, T²)` over the
/// rows of `x_{i+1}` and `x_{i+2}`, content removed and `A > 0`.
pub fn determinant_form(x1: &CohnMatrix, x2: &CohnMatrix) -> Result<BinQuadForm> {
    let mut f = BinQuadForm {
        a: &x1.m * &x2.k - &x1.k * &x2.m,
        b: -(&x1.m * &x2.l - &x1.l * &x2.m),
        c: &x1.k * &x2.l - &x1.l * &x2.k,
    };
    if f.a.is_negative() {
        f = BinQuadForm { a: -f.a, b: -f.b, c: -f.c };
    }
    f.primitive()
}

/// The root of the determinant form nearest to `ξ_t`, independent of the
/// closed-form parity rule.
pub fn best_approx_determinant(t: &MarkoffTriple, i: usize) -> Result<QuadIrr> {
    if i == 0 {
        return Err(Error::Degenerate("best approximations are indexed from 1".into()));
    }
    let xs: Vec<CohnMatrix> = ZigzagWalk::new(t)?.skip(i).take(2).map(|(_, x)| x).collect();
    let f = determinant_form(&xs[0], &xs[1])?;
    let (r1, r2) = f.roots()?;
    let mut w = BigRational::new(BigInt::one(), BigInt::from(1000));
    for _ in 0..8 {
        let xi = xi_enclosure(t, &w)?.interval;
        let d1 = r1.to_interval(&w).sub(&xi).abs();
        let d2 = r2.to_interval(&w).sub(&xi).abs();
        if d1.hi() < d2.lo() {
            return QuadIrr::new(r1);
        }
        if d2.hi() < d1.lo() {
            return QuadIrr::new(r2);
        }
        w = &w * &w;
    }
    Err(Error::PrecisionExhausted)
}

/// A closed interval of base-10 logarithms, rounded outward.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogBand {
    pub lo: f64,
    pub hi: f64,
}

const LOG_PAD: f64 = 1e-12;

impl LogBand {
    fn padded(lo: f64, hi: f64) -> Self {
        LogBand { lo: lo - LOG_PAD * (lo.abs() + 1.0), hi: hi + LOG_PAD * (hi.abs() + 1.0) }
    }

    /// Product with a nonnegative band.
    pub fn mul_pos(self, o: LogBand) -> LogBand {
        debug_assert!(self.lo >= 0.0 && o.lo >= 0.0);
        LogBand::padded(self.lo * o.lo, self.hi * o.hi)
    }

    pub fn scalar(lo: f64, hi: f64) -> LogBand {
        LogBand::padded(lo, hi)
    }

    /// True when `10^lo ≥ band.0` and `10^hi ≤ band.1`.
    pub fn within(&self, band: (f64, f64)) -> bool {
        self.lo >= band.0.log10() && self.hi <= band.1.log10()
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl std::ops::Add for LogBand {
    type Output = LogBand;

    fn add(self, o: LogBand) -> LogBand {
        LogBand::padded(self.lo + o.lo, self.hi + o.hi)
    }
}

impl std::ops::Sub for LogBand {
    type Output = LogBand;

    fn sub(self, o: LogBand) -> LogBand {
        LogBand::padded(self.lo - o.hi, self.hi - o.lo)
    }
}

/// `log₁₀ n` for `n > 0`, from the leading 64 bits.
fn log10_int(n: &BigInt) -> (f64, f64) {
    assert!(n.is_positive());
    let bits = n.bits();
    let (top, shift) =
        if bits > 64 { ((n >> (bits - 64) as usize).to_u64().unwrap(), bits - 64) } else { (n.to_u64().unwrap(), 0) };
    let l2 = std::f64::consts::LOG10_2;
    let lo = (top as f64).log10() + shift as f64 * l2;
    let hi = ((top as f64) + 2.0).log10() + shift as f64 * l2;
    (lo, hi)
}

fn log10_rat(x: &BigRational) -> (f64, f64) {
    let (nl, nh) = log10_int(x.numer());
    let (dl, dh) = log10_int(x.denom());
    (nl - dh, nh - dl)
}

/// `log₁₀` of a positive enclosure.
pub fn log10_interval(x: &RatInterval) -> Result<LogBand> {
    if !x.is_positive() {
        return Err(Error::PrecisionExhausted);
    }
    Ok(LogBand::padded(log10_rat(x.lo()).0, log10_rat(x.hi()).1))
}

pub fn log10_height(h: &BigInt) -> LogBand {
    let (lo, hi) = log10_int(h);
    LogBand::padded(lo, hi)
}

fn gamma_band() -> LogBand {
    LogBand::padded(GAMMA, GAMMA)
}

/// One row of the exponent diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagRow {
    pub approx: BestApprox,
    pub height: BigInt,
    /// `log₁₀ |ξ − α_i|`.
    pub distance: LogBand,
    /// `|ξ − α_i| · H^(2γ+2)`.
    pub approx_ratio: LogBand,
    /// `+3` or `−3`: the conjugate of `ξ` approached by `ᾱ_i`.
    pub conjugate_shift: i32,
    /// `|ξ ± 3 − ᾱ_i| · H²`.
    pub conjugate_ratio: LogBand,
    /// `|ξ − α'_i| |ξ' − ᾱ'_i| · H(α'_i)^(2γ+4)`.
    pub product_ratio: LogBand,
    /// `H(α_{i+1}) / H(α_i)^γ`.
    pub growth_ratio: LogBand,
}

impl DiagRow {
    pub fn within(&self, band: (f64, f64)) -> bool {
        self.approx_ratio.within(band)
            && self.conjugate_ratio.within(band)
            && self.product_ratio.within(band)
            && self.growth_ratio.within(band)
    }
}

fn distance(xi: &RatInterval, x: &QuadNum) -> Result<RatInterval> {
    let w = xi.width().max(BigRational::new(BigInt::one(), BigInt::from(1u64 << 62)) * xi.width());
    let w = if w.is_zero() { BigRational::new(BigInt::one(), BigInt::from(1u64 << 62)) } else { w };
    let d = x.to_interval(&w).sub(xi).abs();
    if d.contains_zero() {
        return Err(Error::PrecisionExhausted);
    }
    Ok(d)
}

/// Exponent diagnostics for `i ∈ from..=to`, refining `ξ` until every
/// distance is certified.
pub fn approx_diagnostics(t: &MarkoffTriple, from: usize, to: usize) -> Result<Vec<DiagRow>> {
    let approxes = best_approx_range(t, from, to + 1)?;
    let mut steps = to + 3;
    loop {
        let xi = xi_enclosure_steps(t, steps)?.interval;
        match diagnostics_with(&xi, &approxes) {
            Err(Error::PrecisionExhausted) if steps < MAX_ZIGZAG_STEPS => steps += 2,
            other => return other,
        }
    }
}

fn diagnostics_with(xi: &RatInterval, approxes: &[BestApprox]) -> Result<Vec<DiagRow>> {
    let g = gamma_band();
    let two = LogBand::scalar(2.0, 2.0);
    let e_approx = g.mul_pos(two) + two;
    let e_prod = e_approx + two;
    let three = BigInt::from(3);
    let mut rows = Vec::new();
    for w in approxes.windows(2) {
        let (a, next) = (&w[0], &w[1]);
        let h = a.alpha.height();
        let lh = log10_height(&h);
        let d = distance(xi, a.alpha.as_num())?;
        let ld = log10_interval(&d)?;
        let shift = match a.kind {
            ApproxKind::Alpha => -3,
            ApproxKind::ConjPlusThree => 3,
        };
        let target = xi.add_int(&BigInt::from(shift));
        let dc = log10_interval(&distance(&target, &a.alpha.conj().into_inner())?)?;
        // α' = ᾱ_n + 3 and ᾱ' = α_n + 3 for the node n in both parities
        let (an, abar) = a.matrix.alpha();
        let a_prime = abar.add_int(&three);
        let a_prime_conj = an.add_int(&three);
        let lp1 = log10_interval(&distance(xi, a_prime.as_num())?)?;
        let lp2 = log10_interval(&distance(&xi.add_int(&three), a_prime_conj.as_num())?)?;
        let lhp = log10_height(&a_prime.height());
        let growth = log10_height(&next.alpha.height()) - lh.mul_pos(g);
        rows.push(DiagRow {
            approx: a.clone(),
            height: h,
            distance: ld,
            approx_ratio: ld + lh.mul_pos(e_approx),
            conjugate_shift: shift,
            conjugate_ratio: dc + lh.mul_pos(two),
            product_ratio: lp1 + lp2 + lhp.mul_pos(e_prod),
            growth_ratio: growth,
        });
    }
    Ok(rows)
}

/// One row of the uniform simultaneous approximation table.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessRow {
    pub x: BigInt,
    /// `(x₀, x₁, x₂)` with `|x₀| ≤ X`.
    pub row: [BigInt; 3],
    /// `log₁₀ max(|x₀ξ − x₁|, |x₀ξ² − x₂|)`.
    pub deviation: LogBand,
    /// `max(|x₀ξ − x₁|, |x₀ξ² − x₂|) · X^(1/γ)`.
    pub product: LogBand,
}

fn row_deviation(xi: &RatInterval, xi2: &RatInterval, row: &[BigInt; 3]) -> RatInterval {
    let x0 = BigRational::from_integer(row[0].clone());
    let d1 = xi.scale(&x0).add_int(&-row[1].clone()).abs();
    let d2 = xi2.scale(&x0).add_int(&-row[2].clone()).abs();
    RatInterval::new(d1.lo().max(d2.lo()).clone(), d1.hi().max(d2.hi()).clone()).unwrap()
}

/// For each `X`, the best among the trivial row `(1, ⌊ξ⌉, ⌊ξ²⌉)` and the
/// zigzag rows `(m, k, l)` with `m ≤ X`.
pub fn extremality_witness(t: &MarkoffTriple, xs: &[BigInt]) -> Result<Vec<WitnessRow>> {
    if xs.iter().any(|x| !x.is_positive()) {
        return Err(Error::InvalidInput("X must be at least 1".into()));
    }
    let xmax = xs.iter().max().cloned().unwrap_or_else(BigInt::one);
    let mut rows: Vec<[BigInt; 3]> = Vec::new();
    let mut steps = 0;
    for (_, x) in ZigzagWalk::new(t)? {
        steps += 1;
        if x.m > xmax {
            break;
        }
        rows.push([x.m, x.k, x.l]);
    }
    let mut extra = 3;
    loop {
        let xi = xi_enclosure_steps(t, steps + extra)?.interval;
        match witness_with(&xi, &rows, xs) {
            Err(Error::PrecisionExhausted) if steps + extra < MAX_ZIGZAG_STEPS => extra += 2,
            other => return other,
        }
    }
}

/// `X_i = m_{i+1} − 1` for `i ∈ from..=to`: the largest `X` before the
/// next zigzag row becomes admissible, where the product is largest.
pub fn witness_gap_points(t: &MarkoffTriple, from: usize, to: usize) -> Result<Vec<BigInt>> {
    if from == 0 || to < from {
        return Err(Error::InvalidInput(format!("gap indices start at 1, got {from}..={to}")));
    }
    Ok(ZigzagWalk::new(t)?.skip(from).take(to - from + 1).map(|(_, x)| x.m - 1u32).collect())
}

fn round_rat(x: &BigRational) -> BigInt {
    floor_rat(&(x + BigRational::new(BigInt::one(), BigInt::from(2))))
}

fn witness_with(xi: &RatInterval, zigzag: &[[BigInt; 3]], xs: &[BigInt]) -> Result<Vec<WitnessRow>> {
    let xi2 = xi.square();
    let trivial = [BigInt::one(), round_rat(&xi.midpoint()), round_rat(&xi2.midpoint())];
    let inv_gamma = LogBand::padded(GAMMA - 1.0, GAMMA - 1.0);
    xs.iter()
        .map(|x| {
            let mut best: Option<([BigInt; 3], RatInterval)> = None;
            for row in std::iter::once(&trivial).chain(zigzag.iter().filter(|r| &r[0] <= x)) {
                let d = row_deviation(xi, &xi2, row);
                if best.as_ref().is_none_or(|(_, b)| d.hi() < b.hi()) {
                    best = Some((row.clone(), d));
                }
            }
            let (row, d) = best.expect("the trivial row is always admissible");
            let dev = log10_interval(&d)?;
            Ok(WitnessRow { x: x.clone(), row, deviation: dev, product: dev + log10_height(x).mul_pos(inv_gamma) })
        })
        .collect()
}

/// A `GL₂(ℤ)`-translate `g·ξ_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub triple: MarkoffTriple,
    pub moebius: Mat2,
}

/// Enclosures of a translate and of its two conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecEnclosure {
    pub value: RatInterval,
    pub prime: RatInterval,
    pub double_prime: RatInterval,
}

impl SpecEnclosure {
    pub fn is_reduced(&self) -> bool {
        let m1 = BigRational::from_integer(-BigInt::one());
        self.value.within_unit() && self.prime.hi() < &m1 && self.double_prime.hi() < &m1
    }

    /// Integer parts of the conjugates, when both are determined.
    pub fn conjugate_floors(&self) -> Option<(BigInt, BigInt)> {
        Some((self.prime.floor()?, self.double_prime.floor()?))
    }

    pub fn is_balanced(&self) -> bool {
        self.is_reduced() && matches!(self.conjugate_floors(), Some((a, b)) if a != b)
    }
}

impl ExtremalSpec {
    pub fn new(t: &MarkoffTriple) -> Self {
        ExtremalSpec { triple: t.clone(), moebius: Mat2::identity() }
    }

    /// `h·(g·ξ)`.
    pub fn transformed(&self, h: &Mat2) -> Self {
        ExtremalSpec { triple: self.triple.clone(), moebius: h * &self.moebius }
    }

    pub fn enclose(&self, xi: &RatInterval) -> Result<SpecEnclosure> {
        let c = conjugates_of(xi);
        let g = &self.moebius;
        let ap = |iv: &RatInterval| g.apply_interval(iv).map_err(|_| Error::PrecisionExhausted);
        Ok(SpecEnclosure { value: ap(&c.xi)?, prime: ap(&c.prime)?, double_prime: ap(&c.double_prime)? })
    }

    /// `±g` with the sign fixed so that `c > 0`, or `c = 0` and `d > 0`.
    pub fn normalized(&self) -> Self {
        let g = &self.moebius;
        let flip = g.c.is_negative() || (g.c.is_zero() && g.d.is_negative());
        ExtremalSpec { triple: self.triple.clone(), moebius: if flip { -g.clone() } else { g.clone() } }
    }
}

/// Maps `g·ξ_m` to the unique reduced and balanced number in its orbit.
///
/// Forward shifts `x ↦ 1/x − a` run until the value lies in `(0, 1)` with
/// both conjugates below `−1`; then `x ↦ 1/(a + x)` is applied while the
/// conjugates share the integer part `−a − 1`. Every integer part is read
/// off an enclosure of `ξ` of width at most `precision`.
pub fn reduce_and_balance(spec: &ExtremalSpec, precision: &BigRational) -> Result<ExtremalSpec> {
    let xi = xi_enclosure(&spec.triple, precision)?.interval;
    reduce_and_balance_with(spec, &xi)
}

/// [`reduce_and_balance`], squaring the width after each `PrecisionExhausted`.
pub fn reduce_and_balance_auto(spec: &ExtremalSpec, precision: &BigRational) -> Result<ExtremalSpec> {
    let mut w = precision.clone();
    for _ in 0..6 {
        match reduce_and_balance(spec, &w) {
            Err(Error::PrecisionExhausted) => w = &w * &w,
            other => return other,
        }
    }
    Err(Error::PrecisionExhausted)
}

pub fn reduce_and_balance_with(spec: &ExtremalSpec, xi: &RatInterval) -> Result<ExtremalSpec> {
    const MAX_SHIFTS: usize = 10_000;
    let mut s = spec.clone();
    let mut done = false;
    for _ in 0..MAX_SHIFTS {
        let e = s.enclose(xi)?;
        if e.is_reduced() {
            done = true;
            break;
        }
        if !e.value.within_unit() {
            let a = e.value.floor().ok_or(Error::PrecisionExhausted)?;
            if a.is_zero() {
                return Err(Error::PrecisionExhausted);
            }
            s = s.transformed(&Mat2::translation(-a));
        } else {
            let inv = e.value.recip().map_err(|_| Error::PrecisionExhausted)?;
            let a = inv.floor().ok_or(Error::PrecisionExhausted)?;
            s = s.transformed(&Mat2::new(-a, 1, 1, 0));
        }
    }
    if !done {
        return Err(Error::PrecisionExhausted);
    }
    for _ in 0..MAX_SHIFTS {
        let e = s.enclose(xi)?;
        let f1 = e.prime.neg().floor().ok_or(Error::PrecisionExhausted)?;
        let f2 = e.double_prime.neg().floor().ok_or(Error::PrecisionExhausted)?;
        if f1 != f2 {
            return Ok(s.normalized());
        }
        s = s.transformed(&Mat2::new(0, 1, 1, f1));
    }
    Err(Error::PrecisionExhausted)
}

/// Compares `x` with `ξ_t`; used to order candidate roots.
pub fn cmp_with_xi(x: &QuadNum, xi: &RatInterval) -> Option<Ordering> {
    let w = xi.width().max(BigRational::new(BigInt::one(), BigInt::from(1u64 << 40)));
    let a = x.to_interval(&w);
    if a.lt(xi) {
        Some(Ordering::Less)
    } else if xi.lt(&a) {
        Some(Ordering::Greater)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, quadirr_make, rat};
    use crate::markoff::locate;

    fn tr(m: i64, m1: i64, m2: i64) -> MarkoffTriple {
        locate(&int(m), &int(m1), &int(m2)).unwrap()
    }

    #[test]
    fn brackets_for_small_nodes() {
        let r = XiRefiner::new(&MarkoffTriple::base()).unwrap().next().unwrap().unwrap();
        assert_eq!(r.node, tr(13, 1, 5));
        assert_eq!(r.matrix, RatInterval::new(rat(19, 31), rat(27, 44)).unwrap());
        assert_eq!(r.word, r.matrix);
    }

    #[test]
    fn enclosures() {
        let e = xi_enclosure(&MarkoffTriple::base(), &rat(1, 100)).unwrap();
        assert!(e.interval.contains(&rat(6133, 10000)));
        assert!(e.interval.width() <= rat(1, 100));
        let e = xi_enclosure(&MarkoffTriple::root(), &rat(1, 100)).unwrap();
        assert!(e.interval.contains(&rat(5859, 10000)));
        let w = BigRational::new(BigInt::one(), BigInt::from(10).pow(60));
        let e = xi_enclosure(&MarkoffTriple::base(), &w).unwrap();
        assert!(e.interval.width() <= w);
        assert!(e.last.steps <= 14);
    }

    #[test]
    fn conjugates() {
        let c = xi_conjugates(&MarkoffTriple::base(), &rat(1, 1000)).unwrap();
        assert!(c.prime.contains(&rat(36133, 10000)));
        assert!(c.double_prime.contains(&rat(-23867, 10000)));
        assert_eq!(c.prime.width(), c.xi.width());
    }

    #[test]
    fn best_approximations() {
        let b = best_approx_detail(&MarkoffTriple::base(), 2).unwrap();
        assert_eq!((b.kind, b.node), (ApproxKind::Alpha, tr(13, 1, 5)));
        assert_eq!(best_approx(&MarkoffTriple::base(), 1).unwrap(), quadirr_make(21, -1, 221, 10).unwrap());
        for i in 1..=6 {
            assert_eq!(
                best_approx(&MarkoffTriple::base(), i).unwrap(),
                best_approx_determinant(&MarkoffTriple::base(), i).unwrap(),
                "i = {i}"
            );
        }
        let f = determinant_form(&CohnMatrix::new(13, 8, 5), &CohnMatrix::new(194, 119, 73)).unwrap();
        assert_eq!(f, BinQuadForm::new(5, -21, 11));
        assert!(best_approx(&MarkoffTriple::base(), 0).is_err());
    }

    #[test]
    fn g_minimum_small_box() {
        let m = associated_form_min(&MarkoffTriple::base(), 10, &rat(1, 1_000_000)).unwrap();
        assert!(m.hi() <= &rat(1, 1));
        assert!(m.lo() > &rat(99, 100));
    }

    #[test]
    fn balancing_is_idempotent() {
        let w = BigRational::new(BigInt::one(), BigInt::from(10).pow(80));
        let s = reduce_and_balance(&ExtremalSpec::new(&MarkoffTriple::base()), &w).unwrap();
        assert_ne!(s.moebius, Mat2::identity());
        assert_eq!(reduce_and_balance(&s, &w).unwrap(), s);
    }
}
