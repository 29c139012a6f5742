//! Exact rational scalars.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    (0..k as i64).fold(Rational::one(), |acc, i| acc * int(n as i64 - i) / int(i + 1))
}

pub fn pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num::pow(base.clone(), exp as usize)
    } else {
        num::pow(base.recip(), (-exp) as usize)
    }
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Parses `"3"`, `"-7/2"` and the like.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a comma-separated list of rationals; the empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse).collect()
}

/// `"num/den"`, or just `"num"` for integers.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(format(&frac(-6, 4)), "-3/2");
        assert_eq!(format(&int(12)), "12");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert_eq!(parse_list("1,1/2, -3").unwrap(), vec![int(1), frac(1, 2), int(-3)]);
        assert!(parse_list("").unwrap().is_empty());
    }

    #[test]
    fn small_combinatorics() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(6), int(720));
        assert_eq!(binomial(7, 2), int(21));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(pow(&frac(2, 3), -2), frac(9, 4));
    }
}
