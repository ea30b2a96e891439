use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{QuadNum, SquareSplit};
use crate::error::{Error, Result};

/// The integer form `aT² + bTU + cU²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinQuadForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl BinQuadForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        BinQuadForm { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn disc(&self) -> BigInt {
        &self.b * &self.b - &self.a * &self.c * 4
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_indefinite(&self) -> bool {
        self.disc().is_positive()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn primitive(&self) -> Result<BinQuadForm> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let g = self.content();
        Ok(BinQuadForm { a: &self.a / &g, b: &self.b / &g, c: &self.c / &g })
    }

    /// `F(T, U)`.
    pub fn eval(&self, t: &BigInt, u: &BigInt) -> BigInt {
        &self.a * t * t + &self.b * t * u + &self.c * u * u
    }

    /// Roots `T/U` of `F(T, 1) = 0`, the `+√disc` root first.
    pub fn roots(&self) -> Result<(QuadNum, QuadNum)> {
        if self.a.is_zero() {
            return Err(Error::Degenerate("leading coefficient is zero".into()));
        }
        let disc = self.disc();
        if disc.is_negative() {
            return Err(Error::Degenerate("definite form has no real roots".into()));
        }
        let split = if disc.is_zero() { SquareSplit::of(&BigInt::from(1)) } else { SquareSplit::of(&disc) };
        let q = if disc.is_zero() { BigInt::zero() } else { BigInt::from(1) };
        let two_a = &self.a * 2u32;
        let plus = QuadNum::with_split(-&self.b, q.clone(), &split, two_a.clone())?;
        let minus = QuadNum::with_split(-&self.b, -q, &split, two_a)?;
        Ok((plus, minus))
    }
}

impl fmt::Display for BinQuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}T^2 {:+}TU {:+}U^2", self.a, self.b, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, quadirr_make};

    #[test]
    fn disc_and_content() {
        let f = BinQuadForm::new(2, 4, -2);
        assert_eq!(f.disc(), int(32));
        assert_eq!(f.content(), int(2));
        assert_eq!(f.primitive().unwrap(), BinQuadForm::new(1, 2, -1));
        assert_eq!(BinQuadForm::new(0, 0, 0).primitive(), Err(Error::ZeroForm));
    }

    #[test]
    fn roots_of_golden_form() {
        let (r, s) = BinQuadForm::new(1, 1, -1).roots().unwrap();
        assert_eq!(r, quadirr_make(-1, 1, 5, 2).unwrap().into_inner());
        assert_eq!(s, quadirr_make(-1, -1, 5, 2).unwrap().into_inner());
    }

    #[test]
    fn display_signs() {
        assert_eq!(BinQuadForm::new(5, 9, -7).to_string(), "5T^2 +9TU -7U^2");
    }
}
