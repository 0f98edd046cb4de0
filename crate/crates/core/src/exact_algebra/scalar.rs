use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Scalar = BigRational;

pub fn q(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qbig(n: BigInt) -> Scalar {
    BigRational::from_integer(n)
}

/// Fraction string, always with an explicit denominator: `-3/4`, `2/1`.
pub fn fmt_frac(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Accepts `a/b`, plain integers and whitespace around either.
pub fn parse_frac(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(qbig(s.parse().map_err(|_| bad())?)),
    }
}

pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative {n}");
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        qi(1)
    } else {
        qi(-1)
    }
}

pub fn is_integer(x: &Scalar) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_roundtrip() {
        for (n, d) in [(3, 4), (-7, 2), (0, 5), (12, 3)] {
            let x = q(n, d);
            assert_eq!(parse_frac(&fmt_frac(&x)).unwrap(), x);
        }
        assert_eq!(fmt_frac(&qi(2)), "2/1");
        assert_eq!(parse_frac(" -5 ").unwrap(), qi(-5));
        assert!(parse_frac("1/0").is_err());
        assert!(parse_frac("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
