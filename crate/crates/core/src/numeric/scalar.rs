use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
///
/// `Scalar` is the base field for every map, projection and first integral in
/// this crate. It is a thin wrapper around [`num_rational::BigRational`],
/// which maintains the normalization invariant on every operation.
///
/// Division panics on a zero divisor, like integer division; the phase space
/// of every registered map is the strictly positive orthant, so no reachable
/// denominator vanishes there.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` as a scalar. Panics if `q == 0`; intended for literals.
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator in Scalar::frac");
        Scalar(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Builds `num/den`, reducing to lowest terms and normalizing the sign.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Scalar(self.0.recip())
    }

    /// Exact integer power, with negative exponents going through the
    /// reciprocal. `0^0 = 1`.
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.recip().pow(-exp);
        }
        let mut result = BigRational::one();
        let mut base = self.0.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Scalar(result)
    }

    /// Exact square root, defined only when numerator and denominator (in
    /// lowest terms) are both perfect squares. `sqrt_exact(0) = 0`.
    pub fn sqrt_exact(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        if self.0.is_negative() {
            return Err(Error::NotPerfectSquare(self.to_string()));
        }
        let num_root = self.numer().sqrt();
        let den_root = self.denom().sqrt();
        if &(&num_root * &num_root) == self.numer() && &(&den_root * &den_root) == self.denom() {
            Ok(Scalar(BigRational::new(num_root, den_root)))
        } else {
            Err(Error::NotPerfectSquare(self.to_string()))
        }
    }

    /// Larger of the numerator and denominator bit lengths; the growth
    /// observable reported by orbit summaries.
    pub fn bit_length(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p` or `p/q` with an optional sign. Non-reduced input is
    /// normalized, so `"2/4"` and `"1/2"` parse to the same scalar.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseScalar(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str.trim()).map_err(|_| bad())?;
        let den = match den_str {
            Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar(BigRational::new(num, den)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl std::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn sqrt_of_perfect_square_fraction() {
        assert_eq!(Scalar::frac(4, 9).sqrt_exact().unwrap(), Scalar::frac(2, 3));
        assert_eq!(Scalar::one().sqrt_exact().unwrap(), Scalar::one());
    }

    #[test]
    fn sqrt_of_two_is_rejected() {
        assert!(matches!(
            Scalar::from_int(2).sqrt_exact(),
            Err(Error::NotPerfectSquare(_))
        ));
    }

    #[test]
    fn sqrt_rejects_non_square_in_lowest_terms() {
        // 8/2 reduces to 4, which is a square even though 8 and 2 are not.
        assert_eq!(s("8/2").sqrt_exact().unwrap(), Scalar::from_int(2));
        assert!(s("2/9").sqrt_exact().is_err());
    }

    #[test]
    fn parse_normalizes_and_display_round_trips() {
        assert_eq!(s("2/4"), Scalar::frac(1, 2));
        assert_eq!(s("-3/6").to_string(), "-1/2");
        assert_eq!(s("+7").to_string(), "7");
        assert_eq!(s("5/-10").to_string(), "-1/2");
        for text in ["0", "-4/7", "22", "355/113"] {
            let v = s(text);
            assert_eq!(v.to_string().parse::<Scalar>().unwrap(), v);
        }
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<Scalar>().is_err());
        assert!("a/b".parse::<Scalar>().is_err());
        assert!("1/".parse::<Scalar>().is_err());
        assert!(matches!("3/0".parse::<Scalar>(), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        assert_eq!(Scalar::from_int(2).pow(10), Scalar::from_int(1024));
        assert_eq!(Scalar::from_int(2).pow(-1), Scalar::frac(1, 2));
        assert_eq!(Scalar::frac(2, 3).pow(-2), Scalar::frac(9, 4));
        assert_eq!(Scalar::zero().pow(0), Scalar::one());
    }

    #[test]
    fn bit_length_tracks_the_larger_side() {
        assert_eq!(Scalar::from_int(1).bit_length(), 1);
        assert_eq!(Scalar::frac(1, 1024).bit_length(), 11);
    }
}
