use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{floor_rat, isqrt, perfect_sqrt, RatInterval};
use crate::error::{Error, Result};

/// Largest radicand for which squarefree extraction is complete.
const FULL_SPLIT_LIMIT: u64 = 1_000_000_000_000_000_000;
/// Trial-division bound used above [`FULL_SPLIT_LIMIT`].
const PARTIAL_SPLIT_BOUND: u64 = 2000;

/// `d = outer² · core` with `core` squarefree whenever `d < 10¹⁸`.
///
/// For larger radicands only prime factors below 2000 and a perfect-square
/// cofactor are pulled out, so `core` may retain a square factor. Every
/// quantity derived from one radicand shares the same split, and mixed
/// arithmetic aligns radicands whose product is a perfect square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSplit {
    pub outer: BigInt,
    pub core: BigInt,
}

impl SquareSplit {
    pub fn of(d: &BigInt) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        if let Some(s) = perfect_sqrt(d) {
            return SquareSplit { outer: s, core: BigInt::one() };
        }
        match d.to_u64() {
            Some(n) if n < FULL_SPLIT_LIMIT => {
                let (o, c) = split_u64(n, u64::MAX);
                SquareSplit { outer: o.into(), core: c.into() }
            }
            _ => split_big(d),
        }
    }

    pub fn is_square(&self) -> bool {
        self.core.is_one()
    }
}

fn split_u64(mut n: u64, bound: u64) -> (u64, u64) {
    let mut outer = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while p <= bound && p.saturating_mul(p).saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            outer *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // the cofactor has at most two prime factors left
    let s = (n as f64).sqrt() as u64;
    match (s.saturating_sub(1)..=s + 1).find(|t| t * t == n) {
        Some(t) if n > 1 => outer *= t,
        _ => core *= n,
    }
    (outer, core)
}

fn split_big(d: &BigInt) -> SquareSplit {
    let mut n = d.clone();
    let mut outer = BigInt::one();
    let mut core = BigInt::one();
    let mut p = 2u64;
    while p < PARTIAL_SPLIT_BOUND {
        let bp = BigInt::from(p);
        let mut e = 0u32;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            outer *= bp.pow(e / 2);
            if e % 2 == 1 {
                core *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    match perfect_sqrt(&n) {
        Some(s) => outer *= s,
        None => core *= n,
    }
    SquareSplit { outer, core }
}

/// A real number `(p + q√d)/r` with `r > 0`; rational values carry `q = 0, d = 1`.
#[derive(Clone, Debug)]
pub struct QuadNum {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

impl QuadNum {
    /// Canonicalizes `(p + q√d)/r`, extracting square factors of `d`.
    pub fn new(p: BigInt, q: BigInt, d: BigInt, r: BigInt) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::InvalidInput(format!("radicand {d} must be positive")));
        }
        let split = SquareSplit::of(&d);
        Self::with_split(p, q, &split, r)
    }

    /// Like [`QuadNum::new`] with the radicand already split.
    pub fn with_split(p: BigInt, q: BigInt, split: &SquareSplit, r: BigInt) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let q = q * &split.outer;
        if split.is_square() {
            return Ok(QuadNum::from_parts(p + q, BigInt::zero(), BigInt::one(), r));
        }
        Ok(QuadNum::from_parts(p, q, split.core.clone(), r))
    }

    /// Normalizes signs and common factors without touching `d`.
    fn from_parts(mut p: BigInt, mut q: BigInt, mut d: BigInt, mut r: BigInt) -> Self {
        if q.is_zero() {
            d = BigInt::one();
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        QuadNum { p, q, d, r }
    }

    pub fn from_int(n: BigInt) -> Self {
        QuadNum::from_parts(n, BigInt::zero(), BigInt::one(), BigInt::one())
    }

    pub fn from_rat(x: &BigRational) -> Self {
        QuadNum::from_parts(x.numer().clone(), BigInt::zero(), BigInt::one(), x.denom().clone())
    }

    pub fn zero() -> Self {
        QuadNum::from_int(BigInt::zero())
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn to_rat(&self) -> Option<BigRational> {
        self.is_rational().then(|| BigRational::new(self.p.clone(), self.r.clone()))
    }

    /// `(p − q√d)/r`.
    pub fn conj(&self) -> Self {
        QuadNum { p: self.p.clone(), q: -&self.q, d: self.d.clone(), r: self.r.clone() }
    }

    pub fn neg(&self) -> Self {
        QuadNum { p: -&self.p, q: -&self.q, d: self.d.clone(), r: self.r.clone() }
    }

    /// `x + x̄`.
    pub fn trace(&self) -> BigRational {
        BigRational::new(&self.p * 2u32, self.r.clone())
    }

    /// `x · x̄`.
    pub fn norm(&self) -> BigRational {
        BigRational::new(&self.p * &self.p - &self.q * &self.q * &self.d, &self.r * &self.r)
    }

    /// Brings two operands over a common radicand.
    fn align(&self, o: &QuadNum) -> Result<(QuadNum, QuadNum)> {
        if self.d == o.d || o.is_rational() {
            let mut o2 = o.clone();
            o2.d = self.d.clone();
            return Ok((self.clone(), o2));
        }
        if self.is_rational() {
            let mut s2 = self.clone();
            s2.d = o.d.clone();
            return Ok((s2, o.clone()));
        }
        // √d₂ = s·√d₁ / d₁ when d₁d₂ = s²
        let prod = &self.d * &o.d;
        match perfect_sqrt(&prod) {
            Some(s) => {
                let o2 = QuadNum::from_parts(&o.p * &self.d, &o.q * s, self.d.clone(), &o.r * &self.d);
                Ok((self.clone(), o2))
            }
            None => Err(Error::IncompatibleFields(self.d.to_string(), o.d.to_string())),
        }
    }

    pub fn add(&self, o: &QuadNum) -> Result<Self> {
        let (x, y) = self.align(o)?;
        Ok(QuadNum::from_parts(&x.p * &y.r + &y.p * &x.r, &x.q * &y.r + &y.q * &x.r, x.d, &x.r * &y.r))
    }

    pub fn sub(&self, o: &QuadNum) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QuadNum) -> Result<Self> {
        let (x, y) = self.align(o)?;
        Ok(QuadNum::from_parts(&x.p * &y.p + &x.q * &y.q * &x.d, &x.p * &y.q + &x.q * &y.p, x.d, &x.r * &y.r))
    }

    pub fn recip(&self) -> Result<Self> {
        let n = &self.p * &self.p - &self.q * &self.q * &self.d;
        if n.is_zero() {
            return Err(Error::Degenerate("reciprocal of zero".into()));
        }
        Ok(QuadNum::from_parts(&self.r * &self.p, -(&self.r * &self.q), self.d.clone(), n))
    }

    pub fn div(&self, o: &QuadNum) -> Result<Self> {
        self.mul(&o.recip()?)
    }

    pub fn add_int(&self, n: &BigInt) -> Self {
        QuadNum::from_parts(&self.p + n * &self.r, self.q.clone(), self.d.clone(), self.r.clone())
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        QuadNum::from_parts(&self.p * n, &self.q * n, self.d.clone(), self.r.clone())
    }

    pub fn add_rat(&self, x: &BigRational) -> Self {
        QuadNum::from_parts(
            &self.p * x.denom() + x.numer() * &self.r,
            &self.q * x.denom(),
            self.d.clone(),
            &self.r * x.denom(),
        )
    }

    pub fn mul_rat(&self, x: &BigRational) -> Self {
        QuadNum::from_parts(&self.p * x.numer(), &self.q * x.numer(), self.d.clone(), &self.r * x.denom())
    }

    /// Sign of the value, decided by comparing `p²` with `q²d`.
    pub fn signum(&self) -> Ordering {
        let sp = self.p.sign();
        let sq = self.q.sign();
        use num_bigint::Sign::*;
        match (sp, sq) {
            (NoSign, NoSign) => Ordering::Equal,
            (Plus, Plus) | (Plus, NoSign) | (NoSign, Plus) => Ordering::Greater,
            (Minus, Minus) | (Minus, NoSign) | (NoSign, Minus) => Ordering::Less,
            (Plus, Minus) => (&self.p * &self.p).cmp(&(&self.q * &self.q * &self.d)),
            (Minus, Plus) => (&self.q * &self.q * &self.d).cmp(&(&self.p * &self.p)),
        }
    }

    pub fn try_cmp(&self, o: &QuadNum) -> Result<Ordering> {
        Ok(self.sub(o)?.signum())
    }

    pub fn cmp_int(&self, n: &BigInt) -> Ordering {
        self.add_int(&-n).signum()
    }

    pub fn cmp_rat(&self, x: &BigRational) -> Ordering {
        self.add_rat(&-x).signum()
    }

    /// `⌊x⌋` by integer square roots only.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return floor_rat(&BigRational::new(self.p.clone(), self.r.clone()));
        }
        let s = isqrt(&(&self.q * &self.q * &self.d));
        if self.q.is_positive() {
            (&self.p + s).div_floor(&self.r)
        } else {
            (&self.p - s - 1u32).div_floor(&self.r)
        }
    }

    /// Primitive integer minimal polynomial, leading coefficient positive,
    /// listed from the top degree down.
    pub fn min_poly(&self) -> Vec<BigInt> {
        if self.is_rational() {
            return vec![self.r.clone(), -&self.p];
        }
        let a = &self.r * &self.r;
        let b = -(&self.p * &self.r * 2u32);
        let c = &self.p * &self.p - &self.q * &self.q * &self.d;
        let g = a.gcd(&b).gcd(&c);
        vec![a / &g, b / &g, c / &g]
    }

    /// Height: the largest absolute coefficient of [`QuadNum::min_poly`].
    pub fn height(&self) -> BigInt {
        self.min_poly().into_iter().map(|c| c.abs()).max().unwrap()
    }

    /// Rational enclosure of width at most `width`.
    pub fn to_interval(&self, width: &BigRational) -> RatInterval {
        assert!(width.is_positive(), "width must be positive");
        if self.is_rational() {
            return RatInterval::point(BigRational::new(self.p.clone(), self.r.clone()));
        }
        // q√d ∈ [s, s+1]/n with s = ⌊n·|q|·√d⌋
        let n = super::ceil_rat(&(width * BigRational::from_integer(self.r.clone())).recip()).max(BigInt::one());
        let s = isqrt(&(&self.q * &self.q * &self.d * &n * &n));
        let den = &self.r * &n;
        let base = &self.p * &n;
        let (lo, hi) =
            if self.q.is_positive() { (&base + &s, &base + &s + 1u32) } else { (&base - &s - 1u32, &base - &s) };
        RatInterval::new(BigRational::new(lo, den.clone()), BigRational::new(hi, den)).unwrap()
    }

    pub fn to_f64(&self) -> f64 {
        let w = BigRational::new(BigInt::one(), BigInt::one() << 80);
        super::rat_to_f64(&self.to_interval(&w).midpoint())
    }
}

impl PartialEq for QuadNum {
    fn eq(&self, o: &QuadNum) -> bool {
        match self.sub(o) {
            Ok(z) => z.is_zero(),
            Err(_) => false,
        }
    }
}

impl Eq for QuadNum {}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = if self.q.is_zero() {
            self.p.to_string()
        } else {
            let rad = if self.q.is_one() {
                format!("√{}", self.d)
            } else if (-&self.q).is_one() {
                format!("-√{}", self.d)
            } else {
                format!("{}√{}", self.q, self.d)
            };
            if self.p.is_zero() {
                rad
            } else if self.q.is_positive() {
                format!("{}+{}", self.p, rad)
            } else {
                format!("{}{}", self.p, rad)
            }
        };
        if self.r.is_one() {
            write!(f, "{num}")
        } else if self.q.is_zero() {
            write!(f, "{num}/{}", self.r)
        } else {
            write!(f, "({num})/{}", self.r)
        }
    }
}

/// A quadratic irrational: a [`QuadNum`] with `q ≠ 0` and non-square `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadIrr(QuadNum);

impl QuadIrr {
    pub fn new(x: QuadNum) -> Result<Self> {
        match x.to_rat() {
            Some(r) => Err(Error::RationalValue(r)),
            None => Ok(QuadIrr(x)),
        }
    }

    pub fn into_inner(self) -> QuadNum {
        self.0
    }

    pub fn as_num(&self) -> &QuadNum {
        &self.0
    }

    pub fn conj(&self) -> QuadIrr {
        QuadIrr(self.0.conj())
    }

    pub fn neg(&self) -> QuadIrr {
        QuadIrr(self.0.neg())
    }

    pub fn add_int(&self, n: &BigInt) -> QuadIrr {
        QuadIrr(self.0.add_int(n))
    }

    pub fn recip(&self) -> QuadIrr {
        QuadIrr(self.0.recip().expect("irrational is nonzero"))
    }

    /// Total order; irrationals from incompatible fields still compare by
    /// refining enclosures.
    pub fn cmp_exact(&self, o: &QuadIrr) -> Ordering {
        match self.0.try_cmp(&o.0) {
            Ok(c) => c,
            Err(_) => {
                let mut w = BigRational::new(BigInt::one(), BigInt::from(1u64 << 32));
                loop {
                    let a = self.0.to_interval(&w);
                    let b = o.0.to_interval(&w);
                    if a.hi() < b.lo() {
                        return Ordering::Less;
                    }
                    if b.hi() < a.lo() {
                        return Ordering::Greater;
                    }
                    w = &w * &w;
                }
            }
        }
    }
}

impl Deref for QuadIrr {
    type Target = QuadNum;
    fn deref(&self) -> &QuadNum {
        &self.0
    }
}

impl fmt::Display for QuadIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Builds `(p + q√d)/r` in canonical form.
pub fn quadirr_make(
    p: impl Into<BigInt>,
    q: impl Into<BigInt>,
    d: impl Into<BigInt>,
    r: impl Into<BigInt>,
) -> Result<QuadIrr> {
    QuadIrr::new(QuadNum::new(p.into(), q.into(), d.into(), r.into())?)
}
