use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{QuadNum, RatInterval};
use crate::error::{Error, Result};

/// A 2×2 integer matrix `(a b; c d)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    /// The matrix `M = (3 1; −1 0)` of the Cohn tree.
    pub fn markoff_m() -> Self {
        Mat2::new(3, 1, -1, 0)
    }

    /// `J = (0 1; −1 0)`.
    pub fn j() -> Self {
        Mat2::new(0, 1, -1, 0)
    }

    /// `(digit 1; 1 0)`, one continued-fraction step.
    pub fn digit(a: impl Into<BigInt>) -> Self {
        Mat2::new(a, 1, 1, 0)
    }

    pub fn translation(b: impl Into<BigInt>) -> Self {
        Mat2::new(1, b, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// Largest absolute value of an entry.
    pub fn norm(&self) -> BigInt {
        [&self.a, &self.b, &self.c, &self.d].into_iter().map(|x| x.abs()).max().unwrap()
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.b == self.c
    }

    /// `(d −b; −c a)`.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// Inverse in `GL₂(ℤ)`; `None` unless `det = ±1`.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_one() {
            Some(self.adjugate())
        } else if (-&det).is_one() {
            Some(-self.adjugate())
        } else {
            None
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Mat2::new(&self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// `g·x = (ax + b)/(cx + d)` on an exact rational; `None` at the pole.
    pub fn apply_rat(&self, x: &BigRational) -> Option<BigRational> {
        let den = x * &self.c + &self.d;
        if den.is_zero() {
            return None;
        }
        Some((x * &self.a + &self.b) / den)
    }

    /// Exact image of a quadratic number.
    pub fn apply_quad(&self, x: &QuadNum) -> Result<QuadNum> {
        if self.det().is_zero() {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let num = x.mul_int(&self.a).add_int(&self.b);
        let den = x.mul_int(&self.c).add_int(&self.d);
        num.div(&den)
    }

    /// Enclosure of the image of an interval. The denominator `cx + d` must
    /// keep a constant sign on the interval.
    pub fn apply_interval(&self, x: &RatInterval) -> Result<RatInterval> {
        if self.det().is_zero() {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let den =
            x.scale(&BigRational::from_integer(self.c.clone())).add_rat(&BigRational::from_integer(self.d.clone()));
        if den.contains_zero() {
            return Err(Error::SignChange);
        }
        // a Möbius map is monotone away from its pole
        let lo = self.apply_rat(x.lo()).ok_or(Error::SignChange)?;
        let hi = self.apply_rat(x.hi()).ok_or(Error::SignChange)?;
        Ok(RatInterval::hull_of(lo, hi))
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl std::ops::Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// Product of a slice of matrices, identity when empty.
pub fn product<'a>(ms: impl IntoIterator<Item = &'a Mat2>) -> Mat2 {
    ms.into_iter().fold(Mat2::identity(), |acc, m| &acc * m)
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}
