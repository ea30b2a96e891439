use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{floor_rat, format_rat, rat_cmp, rat_max, rat_min};
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if rat_cmp(&lo, &hi).is_gt() {
            return Err(Error::InvalidInput(format!("empty interval [{}, {}]", format_rat(&lo), format_rat(&hi))));
        }
        Ok(RatInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RatInterval::point(BigRational::from_integer(n.into()))
    }

    /// Smallest interval holding both values, in either order.
    pub fn hull_of(a: BigRational, b: BigRational) -> Self {
        if rat_cmp(&a, &b).is_le() {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        rat_cmp(&self.lo, x).is_le() && rat_cmp(x, &self.hi).is_le()
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_subset_of(&self, o: &RatInterval) -> bool {
        rat_cmp(&o.lo, &self.lo).is_le() && rat_cmp(&self.hi, &o.hi).is_le()
    }

    pub fn intersect(&self, o: &RatInterval) -> Option<RatInterval> {
        let lo = rat_max(&self.lo, &o.lo).clone();
        let hi = rat_min(&self.hi, &o.hi).clone();
        rat_cmp(&lo, &hi).is_le().then_some(RatInterval { lo, hi })
    }

    pub fn hull(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: rat_min(&self.lo, &o.lo).clone(), hi: rat_max(&self.hi, &o.hi).clone() }
    }

    /// True when every point lies strictly below every point of `o`.
    pub fn lt(&self, o: &RatInterval) -> bool {
        rat_cmp(&self.hi, &o.lo).is_lt()
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add_rat(&self, x: &BigRational) -> RatInterval {
        RatInterval { lo: &self.lo + x, hi: &self.hi + x }
    }

    pub fn add_int(&self, n: &BigInt) -> RatInterval {
        self.add_rat(&BigRational::from_integer(n.clone()))
    }

    pub fn scale(&self, k: &BigRational) -> RatInterval {
        RatInterval::hull_of(&self.lo * k, &self.hi * k)
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min_by(|a, b| rat_cmp(a, b)).unwrap().clone();
        let hi = c.iter().max_by(|a, b| rat_cmp(a, b)).unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn square(&self) -> RatInterval {
        let a = self.abs();
        RatInterval { lo: &a.lo * &a.lo, hi: &a.hi * &a.hi }
    }

    /// `{|x|}` over the interval.
    pub fn abs(&self) -> RatInterval {
        if self.lo.is_negative() && self.hi.is_positive() {
            RatInterval { lo: BigRational::zero(), hi: rat_max(&-&self.lo, &self.hi).clone() }
        } else if self.hi.is_positive() || self.hi.is_zero() && !self.lo.is_negative() {
            self.clone()
        } else {
            self.neg()
        }
    }

    pub fn recip(&self) -> Result<RatInterval> {
        if self.contains_zero() {
            return Err(Error::SignChange);
        }
        Ok(RatInterval::hull_of(self.lo.recip(), self.hi.recip()))
    }

    pub fn div(&self, o: &RatInterval) -> Result<RatInterval> {
        Ok(self.mul(&o.recip()?))
    }

    /// The common integer part of all points, if there is one.
    pub fn floor(&self) -> Option<BigInt> {
        let a = floor_rat(&self.lo);
        (a == floor_rat(&self.hi)).then_some(a)
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// `[0, 1]` test for enclosures known to be reduced.
    pub fn within_unit(&self) -> bool {
        self.lo.is_positive() && rat_cmp(&self.hi, &BigRational::one()).is_lt()
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rat(&self.lo), format_rat(&self.hi))
    }
}
