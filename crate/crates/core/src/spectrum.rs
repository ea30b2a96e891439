//! Lagrange and Markoff values: `μ(F)` of integer indefinite forms, `L(A)` of
//! doubly infinite words, and `ν(ξ) = liminf q‖qξ‖` exactly for quadratic
//! irrationals and as certified intervals for digit streams.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{prefix_interval, quad_cf_expand};
use crate::error::{Error, Result};
use crate::exactnum::{isqrt, perfect_sqrt, BinQuadForm, Mat2, QuadIrr, QuadNum, RatInterval, SquareSplit};
use crate::words::{phi, Word};

/// Interior margin used by [`l_window_sup`] when none is given: positions
/// closer than this to either end of a window are not reported.
pub const DEFAULT_MARGIN: usize = 24;

/// Width of the rational enclosures attached to exact values.
fn enclosure_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(40))
}

/// How a finite ray continues beyond the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tail {
    /// Any continuation with partial quotients `≥ 1`.
    Unknown,
    /// The given word repeated forever.
    Periodic(Word),
}

/// Enclosure of `[a₀; digits, tail]`.
pub fn ray_interval(digits: &[u64], a0: &BigInt, tail: &Tail) -> RatInterval {
    match tail {
        Tail::Unknown => prefix_interval(digits, a0),
        Tail::Periodic(w) => ray_exact(digits, a0, w).to_interval(&enclosure_width()),
    }
}

fn ray_exact(digits: &[u64], a0: &BigInt, period: &Word) -> QuadNum {
    let head = &Mat2::digit(a0.clone()) * &phi(&Word(digits.to_vec()));
    let y = crate::contfrac::periodic_fixed_point(period);
    head.apply_quad(&y).expect("unimodular")
}

/// A finite window `a₀ ⋯ a_{n−1}` of a doubly infinite word; position `i`
/// is the junction between `a_{i−1}` and `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedBiWord {
    pub digits: Vec<u64>,
    /// Continuation to the left of `a₀`, read leftwards.
    pub left_tail: Tail,
    /// Continuation to the right of `a_{n−1}`.
    pub right_tail: Tail,
}

impl WindowedBiWord {
    pub fn new(digits: Vec<u64>) -> Self {
        WindowedBiWord { digits, left_tail: Tail::Unknown, right_tail: Tail::Unknown }
    }

    /// `left · right` with the junction between the two parts at
    /// position `left.len()`.
    pub fn from_parts(left: &Word, right: &Word) -> Self {
        WindowedBiWord::new(left.concat(right).0)
    }

    /// `n` copies of `period`, continued periodically on both sides.
    pub fn periodic(period: &Word, copies: usize) -> Self {
        WindowedBiWord {
            digits: period.repeat(copies).0,
            left_tail: Tail::Periodic(period.reversed()),
            right_tail: Tail::Periodic(period.clone()),
        }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

/// `λ_i = [0; a_i, a_{i+1}, …] + [a_{i−1}; a_{i−2}, …]`, enclosed for every
/// possible continuation of the window.
pub fn lambda_at(w: &WindowedBiWord, i: usize) -> Result<RatInterval> {
    if i == 0 || i >= w.len() {
        return Err(Error::OutOfWindow(i));
    }
    let right = ray_interval(&w.digits[i..], &BigInt::zero(), &w.right_tail);
    let left_digits: Vec<u64> = w.digits[..i - 1].iter().rev().copied().collect();
    let left = ray_interval(&left_digits, &BigInt::from(w.digits[i - 1]), &w.left_tail);
    Ok(right.add(&left))
}

/// `L` of a purely periodic word: an exact quadratic value and an enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LValue {
    pub exact: QuadNum,
    pub enclosure: RatInterval,
}

fn fixed_point_with(g: &Mat2, split: &SquareSplit) -> QuadNum {
    QuadNum::with_split(&g.a - &g.d, BigInt::one(), split, &g.c * 2u32).expect("c > 0")
}

/// Exact `L(⋯ΠΠΠ⋯)`: the largest of the `|Π|` junction values.
pub fn l_periodic(period: &Word) -> Result<LValue> {
    if period.is_empty() {
        return Err(Error::InvalidInput("empty period".into()));
    }
    let mut g = phi(period);
    let disc = g.trace().pow(2) - g.det() * 4u32;
    let split = SquareSplit::of(&disc);
    let n = period.len();
    let mut best: Option<QuadNum> = None;
    for j in 0..n {
        // g = φ(a_j ⋯ a_{j−1}); the left ray a_{j−1}, a_{j−2}, … has φ = gᵗ
        let right = fixed_point_with(&g, &split).recip()?;
        let left = fixed_point_with(&g.transpose(), &split);
        let v = right.add(&left)?;
        if best.as_ref().is_none_or(|b| v.try_cmp(b).unwrap() == Ordering::Greater) {
            best = Some(v);
        }
        let a = Mat2::digit(period.0[j]);
        let a_inv = Mat2::new(0, 1, 1, -(period.0[j] as i64));
        g = &(&a_inv * &g) * &a;
    }
    let exact = best.unwrap();
    let enclosure = exact.to_interval(&enclosure_width());
    Ok(LValue { exact, enclosure })
}

/// `ν(x) = 1/L(period of x)`.
pub fn nu_quadratic(x: &QuadIrr) -> Result<QuadNum> {
    let e = quad_cf_expand(x)?;
    l_periodic(&e.period)?.exact.recip()
}

/// The largest lower endpoint over the reported positions, and every
/// position with at least `margin` digits on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowSup {
    pub lower: BigRational,
    pub positions: Vec<(usize, RatInterval)>,
}

/// Certified lower bound for `L` of any word containing the window.
pub fn l_window_sup(w: &WindowedBiWord, margin: usize) -> Result<WindowSup> {
    if w.len() < 4 {
        return Err(Error::InvalidInput("window needs at least four digits".into()));
    }
    let margin = margin.max(1);
    if 2 * margin > w.len() {
        return Err(Error::InvalidInput(format!("margin {margin} leaves no position in a window of {}", w.len())));
    }
    let positions: Vec<(usize, RatInterval)> = (margin..=w.len() - margin)
        .filter(|&i| i >= 1 && i < w.len())
        .map(|i| lambda_at(w, i).map(|iv| (i, iv)))
        .collect::<Result<_>>()?;
    let lower = positions.iter().map(|(_, iv)| iv.lo().clone()).max().expect("at least one position");
    Ok(WindowSup { lower, positions })
}

fn is_reduced_form(a: &BigInt, b: &BigInt, s: &BigInt) -> bool {
    // |√D − 2|a|| < b < √D with √D ∈ (s, s + 1)
    let two_a = a.abs() * 2u32;
    if b > s || !b.is_positive() {
        return false;
    }
    if &two_a <= s {
        *b >= s + 1u32 - two_a
    } else {
        *b >= two_a - s
    }
}

/// `ρ(a, b, c) = (c, r, (r² − D)/4c)` with `r ≡ −b (mod 2c)` normalized.
fn rho(b: &BigInt, c: &BigInt, d: &BigInt, s: &BigInt) -> (BigInt, BigInt, BigInt) {
    let two_c = c.abs() * 2u32;
    let lo = if &c.abs() > s { -c.abs() + 1u32 } else { s + 1u32 - &two_c };
    let r = &lo + (-b - &lo).mod_floor(&two_c);
    let next_c = (&r * &r - d) / (c * 4u32);
    (c.clone(), r, next_c)
}

/// The cycle of reduced forms equivalent to a primitive indefinite form.
pub fn reduction_cycle(f: &BinQuadForm) -> Result<Vec<BinQuadForm>> {
    let d = f.disc();
    if !d.is_positive() || perfect_sqrt(&d).is_some() {
        return Err(Error::Degenerate(format!("discriminant {d} is not a positive non-square")));
    }
    let s = isqrt(&d);
    let (mut a, mut b, mut c) = (f.a.clone(), f.b.clone(), f.c.clone());
    while !is_reduced_form(&a, &b, &s) {
        (a, b, c) = rho(&b, &c, &d, &s);
    }
    let start = BinQuadForm::new(a.clone(), b.clone(), c.clone());
    let mut cycle = vec![start.clone()];
    loop {
        (a, b, c) = rho(&b, &c, &d, &s);
        let g = BinQuadForm::new(a.clone(), b.clone(), c.clone());
        if g == start {
            return Ok(cycle);
        }
        cycle.push(g);
    }
}

/// `μ(F) = inf |F(x, y)|` over nonzero integer points.
pub fn mu_exact(f: &BinQuadForm) -> Result<BigInt> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f.disc();
    if d.is_negative() {
        return Err(Error::InvalidInput(format!("{f} is definite")));
    }
    if perfect_sqrt(&d).is_some() {
        return Err(Error::Degenerate(format!("{f} represents zero")));
    }
    let g = f.content();
    let cycle = reduction_cycle(&f.primitive()?)?;
    let m = cycle.iter().map(|h| h.a.abs()).min().unwrap();
    Ok(g * m)
}

/// Certified intervals for `q_k‖q_kξ‖`, `k = 1, …`, with the running
/// minimum of their upper endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuSequence {
    pub values: Vec<RatInterval>,
    pub running_min: Vec<BigRational>,
}

/// `q_k‖q_kξ‖ = 1/([a_{k+1}; a_{k+2}, …] + [0; a_k, …, a₁])` for the real
/// `ξ = [a₀; a₁, a₂, …]` whose partial quotients begin with `digits`.
pub fn nu_sequence(digits: &Word, tail: &Tail) -> Result<NuSequence> {
    let n = digits.len();
    if n < 3 {
        return Err(Error::InvalidInput("need at least three digits".into()));
    }
    let a = &digits.0;
    let mut values = Vec::with_capacity(n - 1);
    let mut running_min: Vec<BigRational> = Vec::with_capacity(n - 1);
    let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
    for k in 1..n {
        // q_{k−1}/q_k = [0; a_k, …, a₁]
        let q2 = &q1 * a[k - 1] + &q0;
        (q0, q1) = (q1, q2);
        let back = BigRational::new(q0.clone(), q1.clone());
        let fwd = ray_interval(&a[k + 1..], &BigInt::from(a[k]), tail);
        let v = fwd.add_rat(&back).recip()?;
        let m = match running_min.last() {
            Some(prev) if prev <= v.hi() => prev.clone(),
            _ => v.hi().clone(),
        };
        running_min.push(m);
        values.push(v);
    }
    Ok(NuSequence { values, running_min })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{quadirr_make, rat};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sqrt_n(n: i64) -> QuadNum {
        quadirr_make(0, 1, n, 1).unwrap().into_inner()
    }

    #[test]
    fn lambda_on_constant_words() {
        let ones = WindowedBiWord::new(vec![1; 40]);
        let root5 = sqrt_n(5);
        let iv = lambda_at(&ones, 20).unwrap();
        assert_eq!(root5.cmp_rat(iv.lo()), Ordering::Greater);
        assert_eq!(root5.cmp_rat(iv.hi()), Ordering::Less);
        let twos = WindowedBiWord::new(vec![2; 40]);
        let iv = lambda_at(&twos, 20).unwrap();
        assert_eq!(sqrt_n(8).cmp_rat(iv.lo()), Ordering::Greater);
        assert_eq!(sqrt_n(8).cmp_rat(iv.hi()), Ordering::Less);
        assert_eq!(lambda_at(&twos, 0), Err(Error::OutOfWindow(0)));
        assert_eq!(lambda_at(&twos, 40), Err(Error::OutOfWindow(40)));
    }

    #[test]
    fn lambda_shrinks_with_window() {
        let small = WindowedBiWord::from_parts(&w("11"), &w("22"));
        let big = WindowedBiWord::from_parts(&w("11111111"), &w("22222222"));
        let a = lambda_at(&small, 2).unwrap();
        let b = lambda_at(&big, 8).unwrap();
        assert!(b.is_subset_of(&a));
        assert!(b.width() < a.width());
    }

    #[test]
    fn periodic_values() {
        assert_eq!(l_periodic(&w("1")).unwrap().exact, sqrt_n(5));
        assert_eq!(l_periodic(&w("2")).unwrap().exact, sqrt_n(8));
        assert_eq!(l_periodic(&w("1122")).unwrap().exact, quadirr_make(0, 1, 221, 5).unwrap().into_inner());
        assert!(l_periodic(&Word::default()).is_err());
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu_exact(&BinQuadForm::new(1, 1, -1)).unwrap(), BigInt::from(1));
        assert_eq!(mu_exact(&BinQuadForm::new(5, 9, -7)).unwrap(), BigInt::from(5));
        assert_eq!(mu_exact(&BinQuadForm::new(2, 4, -2)).unwrap(), BigInt::from(2));
        assert_eq!(mu_exact(&BinQuadForm::new(0, 0, 0)), Err(Error::ZeroForm));
        assert!(matches!(mu_exact(&BinQuadForm::new(1, 0, -4)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn nu_of_quadratics() {
        let inv = |n: i64| sqrt_n(n).recip().unwrap();
        assert_eq!(nu_quadratic(&quadirr_make(-1, 1, 5, 2).unwrap()).unwrap(), inv(5));
        assert_eq!(nu_quadratic(&quadirr_make(-1, 1, 2, 1).unwrap()).unwrap(), inv(8));
        assert_eq!(
            nu_quadratic(&quadirr_make(-9, 1, 221, 10).unwrap()).unwrap(),
            quadirr_make(0, 5, 221, 221).unwrap().into_inner()
        );
    }

    #[test]
    fn nu_sequences_of_periodic_streams() {
        for (p, target) in [("1", 5), ("2", 8)] {
            let per = w(p);
            let s = nu_sequence(&per.repeat(200 / per.len()), &Tail::Periodic(per)).unwrap();
            let exact = sqrt_n(target).recip().unwrap();
            let tol = rat(1, 1_000_000);
            for v in &s.values[s.values.len() - 10..] {
                assert_eq!(exact.cmp_rat(&(v.lo() - &tol)), Ordering::Greater);
                assert_eq!(exact.cmp_rat(&(v.hi() + &tol)), Ordering::Less);
            }
        }
    }

    #[test]
    fn window_sup_of_ones() {
        let ones = WindowedBiWord::new(vec![1; 80]);
        let s = l_window_sup(&ones, DEFAULT_MARGIN).unwrap();
        let root5 = sqrt_n(5);
        assert_eq!(root5.cmp_rat(&s.lower), Ordering::Greater);
        assert_eq!(root5.cmp_rat(&(s.lower.clone() + rat(1, 1_000_000))), Ordering::Less);
    }
}
