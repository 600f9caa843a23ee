//! Arbitrary-precision rationals and small parsing/printing helpers.
//!
//! `BigRat` is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator, which is exactly the invariant the rest of the
//! crate relies on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::error::{CoreError, Result};

pub type BigRat = num_rational::BigRational;

pub fn rat_zero() -> BigRat {
    BigRat::zero()
}

pub fn rat_one() -> BigRat {
    BigRat::one()
}

pub fn rat_i64(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRat {
    assert!(d != 0, "zero denominator");
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Renders `p/q` as `p` when `q == 1`, else `p/q`.
pub fn format_rat(x: &BigRat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = n
        .parse()
        .map_err(|_| CoreError::Parse(format!("bad integer `{n}`")))?;
    let denom: BigInt = d
        .parse()
        .map_err(|_| CoreError::Parse(format!("bad integer `{d}`")))?;
    if denom.is_zero() {
        return Err(CoreError::DivisionByZero);
    }
    Ok(BigRat::new(numer, denom))
}

/// Exact integer power with negative exponents allowed (base must be nonzero
/// for negative exponents).
pub fn rat_pow(base: &BigRat, exp: i64) -> Result<BigRat> {
    if exp >= 0 {
        Ok(num_traits::pow::pow(base.clone(), exp as usize))
    } else {
        if base.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Ok(num_traits::pow::pow(base.clone(), (-exp) as usize)
            .recip())
    }
}

pub fn is_negative(x: &BigRat) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7/2", "0", "22/7"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(format_rat(&x), s);
        }
    }

    #[test]
    fn pow_negative_exponent() {
        let x = rat(2, 3);
        assert_eq!(rat_pow(&x, -2).unwrap(), rat(9, 4));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
