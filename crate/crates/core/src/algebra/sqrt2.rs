//! Rank-2 ring extension of the Laurent ring by `sqrt(2)`.
//!
//! The bosonization weights inject `1/sqrt(2)` factors; keeping the
//! radical part as an explicit component makes "the sqrt(2) part
//! vanished" a testable statement rather than a floating-point hope.

use std::fmt;



use super::error::Result;
use super::laurent::LaurentPoly;
use super::rational::{rat, BigRat};

/// `rational_part + sqrt(2) * radical_part`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sqrt2Ext {
    pub rat: LaurentPoly,
    pub rad: LaurentPoly,
}

impl Sqrt2Ext {
    pub fn zero() -> Self {
        Sqrt2Ext {
            rat: LaurentPoly::zero(),
            rad: LaurentPoly::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Sqrt2Ext {
            rat: p,
            rad: LaurentPoly::zero(),
        }
    }

    /// `sqrt(2) * p`
    pub fn radical(p: LaurentPoly) -> Self {
        Sqrt2Ext {
            rat: LaurentPoly::zero(),
            rad: p,
        }
    }

    pub fn sqrt2() -> Self {
        Self::radical(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    pub fn is_radical_free(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn neg(&self) -> Self {
        Sqrt2Ext {
            rat: self.rat.neg(),
            rad: self.rad.neg(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Sqrt2Ext {
            rat: self.rat.add(&rhs.rat),
            rad: self.rad.add(&rhs.rad),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Sqrt2Ext {
            rat: self.rat.sub(&rhs.rat),
            rad: self.rad.sub(&rhs.rad),
        }
    }

    /// `(a + √2 b)(c + √2 d) = (ac + 2bd) + √2 (ad + bc)`
    pub fn mul(&self, rhs: &Self) -> Self {
        let two = LaurentPoly::from_int(2);
        Sqrt2Ext {
            rat: self
                .rat
                .mul(&rhs.rat)
                .add(&two.mul(&self.rad.mul(&rhs.rad))),
            rad: self.rat.mul(&rhs.rad).add(&self.rad.mul(&rhs.rat)),
        }
    }

    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        Sqrt2Ext {
            rat: self.rat.mul(p),
            rad: self.rad.mul(p),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Sqrt2Ext {
            rat: self.rat.scale(c),
            rad: self.rad.scale(c),
        }
    }

    pub fn mul_u_pow(&self, shift: i64) -> Self {
        Sqrt2Ext {
            rat: self.rat.mul_u_pow(shift),
            rad: self.rad.mul_u_pow(shift),
        }
    }

    /// Division by `sqrt(2)`: `(a + √2 b)/√2 = b + √2 (a/2)`.
    pub fn div_sqrt2(&self) -> Self {
        Sqrt2Ext {
            rat: self.rad.clone(),
            rad: self.rat.scale(&rat(1, 2)),
        }
    }

    /// Division by `(sqrt(2t))^k = (sqrt(2) u)^k` for `k >= 0`.
    pub fn div_sqrt2t_pow(&self, k: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.div_sqrt2().mul_u_pow(-1);
        }
        out
    }

    /// Componentwise exact division by a Laurent polynomial.
    pub fn try_exact_div_laurent(&self, p: &LaurentPoly) -> Result<Self> {
        Ok(Sqrt2Ext {
            rat: self.rat.try_exact_div(p)?,
            rad: self.rad.try_exact_div(p)?,
        })
    }

    pub fn subst_t_inv(&self) -> Self {
        Sqrt2Ext {
            rat: self.rat.subst_t_inv(),
            rad: self.rad.subst_t_inv(),
        }
    }
}

impl fmt::Display for Sqrt2Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rad.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if self.rat.is_zero() {
            return write!(f, "sqrt2*({})", self.rad);
        }
        write!(f, "{} + sqrt2*({})", self.rat, self.rad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Sqrt2Ext::sqrt2();
        assert_eq!(s.mul(&s), Sqrt2Ext::from_laurent(LaurentPoly::from_int(2)));
    }

    #[test]
    fn div_sqrt2_inverts_mul() {
        let x = Sqrt2Ext {
            rat: LaurentPoly::t_pow(2),
            rad: LaurentPoly::from_int(-3),
        };
        let back = x.mul(&Sqrt2Ext::sqrt2()).div_sqrt2();
        assert_eq!(back, x);
    }

    #[test]
    fn div_sqrt2t_pow_matches_square() {
        // dividing twice by sqrt(2t) equals dividing by 2t
        let x = Sqrt2Ext {
            rat: LaurentPoly::t_pow(3),
            rad: LaurentPoly::t_pow(1),
        };
        let got = x.div_sqrt2t_pow(2);
        let want = Sqrt2Ext {
            rat: LaurentPoly::t_pow(2).scale(&rat(1, 2)),
            rad: LaurentPoly::t_pow(0).scale(&rat(1, 2)),
        };
        assert_eq!(got, want);
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let x = Sqrt2Ext {
            rat: LaurentPoly::u_pow(-1),
            rad: LaurentPoly::t_pow(1),
        };
        assert_eq!(x.mul(&Sqrt2Ext::one()), x);
    }
}
