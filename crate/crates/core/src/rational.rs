//! Reduced ratios of integer polynomials.

use std::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `num / den` in lowest terms: polynomial gcd divided out, integer content
/// shared by numerator and denominator removed, denominator leading
/// coefficient positive. Equal functions therefore have equal coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFn {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Precondition("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalFn { num, den: IntPolynomial::one() });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_negative() {
            c = -c;
        }
        num = num.div_exact(&IntPolynomial::constant(c.clone())).expect("content divides");
        den = den.div_exact(&IntPolynomial::constant(c)).expect("content divides");
        Ok(RationalFn { num, den })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// `f(x + c)`
    pub fn shift(&self, c: i64) -> Self {
        RationalFn::new(self.num.shift(c), self.den.shift(c)).expect("shift keeps denominator")
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (2x + 2) / (x^2 - 1) = 2 / (x - 1)
        let r = RationalFn::new(p(&[2, 2]), p(&[-1, 0, 1])).unwrap();
        assert_eq!(r.numerator(), &p(&[2]));
        assert_eq!(r.denominator(), &p(&[-1, 1]));
        // 4 / (-2x + 2) = -2 / (x - 1)
        let r = RationalFn::new(p(&[4]), p(&[2, -2])).unwrap();
        assert_eq!(r.numerator(), &p(&[-2]));
        assert_eq!(r.denominator(), &p(&[-1, 1]));
        assert!(RationalFn::new(p(&[1]), IntPolynomial::zero()).is_err());
        assert_eq!(r.to_string(), "(-2) / (x - 1)");
    }
}
