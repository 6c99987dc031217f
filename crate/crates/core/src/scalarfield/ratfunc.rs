use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{poly_gcd, Poly, Rational, ScalarError};

/// Element of the fraction field `Q(t)`, kept reduced with a monic
/// denominator so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc = den.leading().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::default(),
            den: Poly::from_int(1),
        }
    }

    pub fn one() -> Self {
        RatFunc::from(Poly::from_int(1))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Value at `t0`; `None` at a pole.
    pub fn eval(&self, t0: &Rational) -> Option<Rational> {
        let d = self.den.eval(t0);
        if d == Rational::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(t0) / d)
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::from_int(1),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::from(Poly::constant(c))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::scalarfield::rat;

    #[test]
    fn reduced_with_monic_denominator() {
        let r = RatFunc::new(Poly::from_ints(&[0, 2]), Poly::from_ints(&[0, 0, 4])).unwrap();
        assert_eq!(r.numer(), &Poly::constant(rat(1, 2)));
        assert_eq!(r.denom(), &Poly::t());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(Poly::t(), Poly::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn pole_has_no_value() {
        let r = RatFunc::new(Poly::from_int(1), Poly::from_ints(&[2, 3])).unwrap();
        assert_eq!(r.eval(&rat(-2, 3)), None);
        assert_eq!(r.eval(&rat(0, 1)), Some(rat(1, 2)));
    }
}
