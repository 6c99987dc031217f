//! Exact scalars: rationals, polynomials in the deformation parameter `t`,
//! rational functions in `t`, and residue rings `Q[t]/(p)`.
//!
//! Nothing here touches floating point. Whether a boundary matrix drops rank
//! depends on exact vanishing such as `2 + 3t = 0`, so every coefficient is
//! an arbitrary-precision rational.

mod poly;
mod quotient;
mod ratfunc;

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

pub use poly::{eval_at, poly_gcd, poly_xgcd, rational_roots, Poly};
pub use quotient::{Residue, ResidueRing};
pub use ratfunc::RatFunc;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Shorthand constructor `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let err = || ScalarError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d == BigInt::from(0) {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| err())?,
        )),
    }
}

/// Canonical wire form of a rational: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational(" 3/2 ").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4, 1));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-2, 3)), "-2/3");
        assert_eq!(format_rational(&rat(5, 1)), "5");
    }
}
