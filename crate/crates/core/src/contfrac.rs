//! Continued fractions: exact expansion of quadratic irrationals with period
//! detection, convergents, and enclosures of every real sharing a prefix.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{isqrt, Mat2, QuadIrr, QuadNum, RatInterval, SquareSplit};
use crate::words::{phi, Word};

/// `[a₀; preperiod, (period)^∞]`; an empty period marks a finite expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    pub a0: BigInt,
    pub preperiod: Word,
    pub period: Word,
}

impl CFExpansion {
    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty() && self.is_periodic()
    }

    /// The first `n` partial quotients after `a₀`.
    pub fn digits(&self, n: usize) -> Word {
        let mut v: Vec<u64> = self.preperiod.0.iter().copied().take(n).collect();
        if self.is_periodic() {
            v.extend(self.period.0.iter().cycle().take(n - v.len()));
        }
        Word(v)
    }

    /// The exact value: the fixed point `y > 1` of `φ(period)` pushed
    /// through `a₀` and the preperiod.
    pub fn value(&self) -> QuadNum {
        let head = &Mat2::digit(self.a0.clone()) * &phi(&self.preperiod);
        if !self.is_periodic() {
            // finite: drop the trailing 1/x flip
            let v = BigRational::new(head.a.clone(), head.c.clone());
            return QuadNum::from_rat(&v);
        }
        let y = periodic_fixed_point(&self.period);
        head.apply_quad(&y).expect("digit matrices are unimodular")
    }
}

/// `[(w)^∞] = [w₁; w₂, …, w_k, w₁, …]`, the fixed point above one of `φ(w)`.
pub fn periodic_fixed_point(w: &Word) -> QuadNum {
    let g = phi(w);
    // c·y² + (d − a)·y − b = 0
    let am = &g.a - &g.d;
    let disc = &am * &am + &g.b * &g.c * 4u32;
    let split = SquareSplit::of(&disc);
    QuadNum::with_split(am, BigInt::one(), &split, &g.c * 2u32).expect("c > 0")
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |w: &Word| w.0.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        write!(f, "[{}; {}", self.a0, join(&self.preperiod))?;
        if self.is_periodic() {
            write!(f, " | {}", join(&self.period))?;
        }
        f.write_str("]")
    }
}

/// `⌊(P + √D)/Q⌋` for non-square `D`.
fn surd_floor(p: &BigInt, s: &BigInt, q: &BigInt) -> BigInt {
    let n = p + s;
    if q.is_positive() {
        n.div_floor(q)
    } else {
        -(n.div_floor(&-q) + 1u32)
    }
}

fn to_digit(a: &BigInt) -> Result<u64> {
    a.to_u64().ok_or(Error::DigitOverflow)
}

/// Exact expansion of a quadratic irrational; the detected period is primitive.
pub fn quad_cf_expand(x: &QuadIrr) -> Result<CFExpansion> {
    // x = (P + √D)/Q with Q | D − P²
    let sign = if x.q().is_positive() { BigInt::one() } else { -BigInt::one() };
    let mut d = x.q() * x.q() * x.d();
    let mut p = x.p() * &sign;
    let mut q = x.r() * &sign;
    if !((&d - &p * &p) % &q).is_zero() {
        let qa = q.abs();
        p *= &qa;
        d *= &qa * &qa;
        q *= &qa;
    }
    let s = isqrt(&d);
    let a0 = surd_floor(&p, &s, &q);
    let mut digits = Vec::new();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut a = a0.clone();
    loop {
        p = &a * &q - &p;
        q = (&d - &p * &p) / &q;
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            return Ok(CFExpansion {
                a0,
                preperiod: Word(digits[..start].to_vec()),
                period: Word(digits[start..].to_vec()),
            });
        }
        seen.insert((p.clone(), q.clone()), digits.len());
        a = surd_floor(&p, &s, &q);
        digits.push(to_digit(&a)?);
    }
}

/// First `n` partial quotients after `a₀` of any real quadratic number;
/// shorter when the value is rational.
pub fn quad_digits(x: &QuadNum, n: usize) -> Result<(BigInt, Word)> {
    match QuadIrr::new(x.clone()) {
        Ok(irr) => {
            let e = quad_cf_expand(&irr)?;
            Ok((e.a0.clone(), e.digits(n)))
        }
        Err(_) => {
            let r = x.to_rat().expect("rational branch");
            let (a0, w) = rational_cf(&r)?;
            Ok((a0, w.prefix(n)))
        }
    }
}

/// Finite expansion of a rational, ending in a digit above one when possible.
pub fn rational_cf(x: &BigRational) -> Result<(BigInt, Word)> {
    let mut n = x.numer().clone();
    let mut d = x.denom().clone();
    let (a0, r) = n.div_mod_floor(&d);
    let mut v = Vec::new();
    n = d;
    d = r;
    while !d.is_zero() {
        let (a, r) = n.div_mod_floor(&d);
        v.push(to_digit(&a)?);
        n = d;
        d = r;
    }
    Ok((a0, Word(v)))
}

/// `0 < x < 1` and `x̄ < −1`.
pub fn is_reduced_quad(x: &QuadIrr) -> bool {
    use std::cmp::Ordering::*;
    x.signum() == Greater && x.cmp_int(&BigInt::one()) == Less && x.conj().cmp_int(&-BigInt::one()) == Less
}

/// `p_k/q_k` for `k = 0..=n`.
pub fn convergents(digits: &Word, a0: &BigInt) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(digits.len() + 1);
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (a0.clone(), BigInt::one());
    out.push(BigRational::new(p1.clone(), q1.clone()));
    for &a in &digits.0 {
        let p2 = &p1 * a + &p0;
        let q2 = &q1 * a + &q0;
        out.push(BigRational::new(p2.clone(), q2.clone()));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    out
}

/// Numerators and denominators of the last two convergents.
fn last_two(digits: &[u64], a0: &BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (a0.clone(), BigInt::one());
    for &a in digits {
        let p2 = &p1 * a + &p0;
        let q2 = &q1 * a + &q0;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    (p1, q1, p0, q0)
}

/// Every real `[a₀; digits, t…]` with an arbitrary continuation `t ≥ 1`
/// lies between `p_n/q_n` and `(p_n + p_{n−1})/(q_n + q_{n−1})`.
pub fn prefix_interval(digits: &[u64], a0: &BigInt) -> RatInterval {
    let (p, q, pp, qp) = last_two(digits, a0);
    if digits.is_empty() {
        return RatInterval::new(BigRational::from_integer(a0.clone()), BigRational::from_integer(a0 + 1u32)).unwrap();
    }
    RatInterval::hull_of(BigRational::new(p.clone(), q.clone()), BigRational::new(p + pp, q + qp))
}

/// Tail of an expansion after `s` digits and the matrix `g` with
/// `g·[0; d_{s+1}, …] = [a₀; d₁, …]`.
pub fn serret_tail(digits: &Word, a0: &BigInt, s: usize) -> Result<(Word, Mat2)> {
    if s > digits.len() {
        return Err(Error::InvalidInput(format!("shift {s} exceeds the {} available digits", digits.len())));
    }
    let head = &Mat2::digit(a0.clone()) * &phi(&digits.prefix(s));
    let g = &head * &Mat2::digit(0);
    Ok((Word(digits.0[s..].to_vec()), g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, quadirr_make, rat};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn expansions() {
        let e = quad_cf_expand(&quadirr_make(-1, 1, 5, 2).unwrap()).unwrap();
        assert_eq!((e.a0.clone(), e.preperiod.clone(), e.period.clone()), (int(0), w(""), w("1")));
        let e = quad_cf_expand(&quadirr_make(-1, 1, 2, 1).unwrap()).unwrap();
        assert_eq!((e.a0.clone(), e.period.clone()), (int(0), w("2")));
        let e = quad_cf_expand(&quadirr_make(-9, 1, 221, 10).unwrap()).unwrap();
        assert!(e.is_purely_periodic());
        assert_eq!(e.period, w("1122"));
        let e = quad_cf_expand(&quadirr_make(0, 1, 7, 1).unwrap()).unwrap();
        assert_eq!((e.a0.clone(), e.period.clone()), (int(2), w("1114")));
        assert_eq!(e.to_string(), "[2;  | 1, 1, 1, 4]");
    }

    #[test]
    fn round_trip_with_preperiod() {
        for x in [
            quadirr_make(3, -2, 13, 7).unwrap(),
            quadirr_make(-11, 5, 6, 3).unwrap(),
            quadirr_make(1, 1, 221, 10).unwrap(),
        ] {
            let e = quad_cf_expand(&x).unwrap();
            assert_eq!(e.value(), *x.as_num(), "{x} -> {e}");
        }
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced_quad(&quadirr_make(-1, 1, 5, 2).unwrap()));
        assert!(!is_reduced_quad(&quadirr_make(0, 1, 2, 1).unwrap()));
        assert!(is_reduced_quad(&quadirr_make(-9, 1, 221, 10).unwrap()));
    }

    #[test]
    fn convergent_lists() {
        assert_eq!(convergents(&w("112"), &int(0)), vec![rat(0, 1), rat(1, 1), rat(1, 2), rat(3, 5)]);
        assert_eq!(convergents(&w("2"), &int(0)), vec![rat(0, 1), rat(1, 2)]);
        assert_eq!(*convergents(&w("111122"), &int(0)).last().unwrap(), rat(19, 31));
    }

    #[test]
    fn prefix_intervals() {
        let i = prefix_interval(&[1, 1, 2], &int(0));
        assert_eq!((i.lo(), i.hi()), (&rat(4, 7), &rat(3, 5)));
        let i = prefix_interval(&[1], &int(0));
        assert_eq!((i.lo(), i.hi()), (&rat(1, 2), &rat(1, 1)));
        let i = prefix_interval(&[2, 2], &int(0));
        assert_eq!((i.lo(), i.hi()), (&rat(2, 5), &rat(3, 7)));
        let i = prefix_interval(&[], &int(3));
        assert_eq!((i.lo(), i.hi()), (&rat(3, 1), &rat(4, 1)));
    }

    #[test]
    fn serret_shifts() {
        let d = w("1122");
        let (t, g) = serret_tail(&d, &int(0), 0).unwrap();
        assert_eq!((t, g), (d.clone(), Mat2::identity()));
        let (t, g1) = serret_tail(&d, &int(0), 1).unwrap();
        assert_eq!(t, w("122"));
        assert_eq!(g1, Mat2::new(0, 1, 1, 1));
        let (t1, h) = serret_tail(&t, &int(0), 1).unwrap();
        let (t2, g2) = serret_tail(&d, &int(0), 2).unwrap();
        assert_eq!((t1, &g1 * &h), (t2, g2));
        assert!(serret_tail(&d, &int(0), 5).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(rational_cf(&rat(3, 5)).unwrap(), (int(0), w("112")));
        assert_eq!(rational_cf(&rat(-1, 2)).unwrap(), (int(-1), w("2")));
    }
}
