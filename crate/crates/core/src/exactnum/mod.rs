//! Exact numbers shared by every other module: big integers and rationals,
//! 2×2 integer matrices acting by Möbius transformations, real quadratic
//! irrationals, closed rational intervals and binary quadratic forms.

mod form;
mod interval;
mod mat2;
mod quad;

pub use form::BinQuadForm;
pub use interval::RatInterval;
pub use mat2::{product, Mat2};
pub use quad::{quadirr_make, QuadIrr, QuadNum, SquareSplit};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    n.sqrt()
}

pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

pub fn floor_rat(x: &BigRational) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil_rat(x: &BigRational) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

/// Inverse of `a` modulo `m > 0`, in `[0, m)`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Total order on rationals by cross-multiplication.
///
/// `Ord` on `BigRational` recurses once per shared continued-fraction
/// digit, which exhausts the stack on nearly equal endpoints.
pub fn rat_cmp(a: &BigRational, b: &BigRational) -> std::cmp::Ordering {
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

pub fn rat_max<'a>(a: &'a BigRational, b: &'a BigRational) -> &'a BigRational {
    if rat_cmp(a, b).is_lt() {
        b
    } else {
        a
    }
}

pub fn rat_min<'a>(a: &'a BigRational, b: &'a BigRational) -> &'a BigRational {
    if rat_cmp(a, b).is_gt() {
        b
    } else {
        a
    }
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p/q"`, `"p"`, and powers written as `"1/10^60"` or `"10^-60"`.
pub fn parse_rat(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let term = |t: &str| -> Result<BigRational> {
        let t = t.trim();
        if let Some((base, exp)) = t.split_once('^') {
            let base: BigInt = base.trim().parse().map_err(|_| bad())?;
            let exp: i32 = exp.trim().parse().map_err(|_| bad())?;
            let p = BigRational::from_integer(base.pow(exp.unsigned_abs()));
            if exp < 0 {
                if p.is_zero() {
                    return Err(bad());
                }
                Ok(p.recip())
            } else {
                Ok(p)
            }
        } else {
            Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?))
        }
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = term(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(term(n)? / d)
        }
        None => term(s),
    }
}

/// Lossy conversion for display.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    let n = x.numer();
    let d = x.denom();
    let shift = (n.bits() as i64).max(d.bits() as i64) - 60;
    if shift <= 0 {
        return n_to_f64(n) / n_to_f64(d);
    }
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    // scale both to ~60 bits and track the binary exponent separately
    let ns = nb - 60;
    let ds = db - 60;
    let nn = if ns > 0 { n >> (ns as usize) } else { n.clone() };
    let dd = if ds > 0 { d >> (ds as usize) } else { d.clone() };
    let e = ns.max(0) - ds.max(0);
    n_to_f64(&nn) / n_to_f64(&dd) * 2f64.powi(e.clamp(-2000, 2000) as i32)
}

fn n_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_powers() {
        assert_eq!(parse_rat("1/10^3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rat("10^-2").unwrap(), rat(1, 100));
        assert_eq!(parse_rat("-7/21").unwrap(), rat(-1, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(&int(2), &int(5)), Some(int(3)));
        assert_eq!(mod_inverse(&int(2), &int(4)), None);
        assert_eq!(mod_inverse(&int(7), &int(1)), Some(int(0)));
    }

    #[test]
    fn floors() {
        assert_eq!(floor_rat(&rat(-1, 2)), int(-1));
        assert_eq!(ceil_rat(&rat(-1, 2)), int(0));
        assert_eq!(ceil_rat(&rat(4, 2)), int(2));
    }

    #[test]
    fn f64_of_huge_rational() {
        let big = BigInt::from(10).pow(400);
        let x = BigRational::new(&big * 3 + 1, big * 7);
        assert!((rat_to_f64(&x) - 3.0 / 7.0).abs() < 1e-12);
    }
}
