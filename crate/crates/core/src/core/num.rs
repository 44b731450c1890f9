//! Exact numbers: arbitrary-precision rationals and Gaussian rationals.
//!
//! All quantum amplitudes in this crate are Gaussian rationals, i.e.
//! complex numbers with rational real and imaginary parts. Every
//! operation used here (addition, multiplication, conjugation, squared
//! modulus) is closed over them, which is what makes exact zero tests
//! and the emptiness decider possible.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational number, always in canonical form (reduced, positive
/// denominator). Backed by `num_rational::BigRational`.
pub type Rational = num_rational::BigRational;

/// Parses a rational written as `"p/q"` or `"p"`. Non-canonical input
/// like `"2/4"` is normalized, never rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || {
        Error::Schema(format!(
            "invalid rational {s:?} (only rationals \"p/q\" are supported as amplitudes)"
        ))
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Validation(format!(
            "rational {s:?} has zero denominator"
        )));
    }
    Ok(Rational::new(n, d))
}

/// Renders a rational canonically as `"p/q"`, always with an explicit
/// denominator (`0` prints as `"0/1"`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `re² + im²`, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    /// Parses the 2-element `["re", "im"]` string form used in machine files.
    pub fn parse_pair(re: &str, im: &str) -> Result<Self> {
        Ok(GaussianRational {
            re: parse_rational(re)?,
            im: parse_rational(im)?,
        })
    }

    /// Canonical `["p/q", "p/q"]` pair.
    pub fn format_pair(&self) -> (String, String) {
        (format_rational(&self.re), format_rational(&self.im))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_canonicalized_on_parse() {
        let r = parse_rational("2/4").unwrap();
        assert_eq!(format_rational(&r), "1/2");
        let r = parse_rational("-6/-4").unwrap();
        assert_eq!(format_rational(&r), "3/2");
        let r = parse_rational("3").unwrap();
        assert_eq!(format_rational(&r), "3/1");
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn non_rational_amplitude_is_rejected_with_schema_error() {
        let err = parse_rational("sqrt(2)/2").unwrap_err();
        assert!(matches!(err, Error::Schema(_)));
        assert!(err.to_string().contains("only rationals"));
    }

    #[test]
    fn gaussian_arithmetic() {
        let a = GaussianRational::new(rat(3, 5), rat(4, 5));
        let b = a.conj();
        let prod = &a * &b;
        assert_eq!(prod, GaussianRational::one());
        assert_eq!(a.norm_sqr(), rat(1, 1));
        let quot = &a / &a;
        assert_eq!(quot, GaussianRational::one());
        assert_eq!(
            &GaussianRational::i() * &GaussianRational::i(),
            GaussianRational::from_int(-1)
        );
    }
}
