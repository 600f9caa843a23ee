//! Reduced fractions of multivariate polynomials, plus a univariate
//! variant used by the point-evaluation Nekrasov mode.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::error::{CoreError, Result};
use super::mpoly::MPoly;
use super::rational::BigRat;
use super::upoly::UPoly;

/// Reduced multivariate rational function with a declared variable list.
///
/// Invariants: the denominator is nonzero, primitive with positive
/// lex-leading coefficient, and `gcd(num, den)` is a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    vars: &'static [&'static str],
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn new(vars: &'static [&'static str], num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        assert_eq!(num.nvars(), vars.len());
        assert_eq!(den.nvars(), vars.len());
        if num.is_zero() {
            return Ok(RatFunc {
                vars,
                num,
                den: MPoly::one(vars.len()),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        let c = den.content();
        den = den.scale(&c.recip());
        num = num.scale(&c.recip());
        Ok(RatFunc { vars, num, den })
    }

    /// Wraps an already-reduced pair. Reduction is re-checked in debug
    /// builds; release builds trust the caller (used by summation paths
    /// whose reduction is guaranteed by construction).
    pub fn new_reduced(vars: &'static [&'static str], num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        debug_assert!(num.gcd(&den).is_constant(), "pair not reduced");
        let c = den.content();
        Ok(RatFunc {
            vars,
            num: num.scale(&c.recip()),
            den: den.scale(&c.recip()),
        })
    }

    pub fn from_poly(vars: &'static [&'static str], num: MPoly) -> Self {
        let n = vars.len();
        assert_eq!(num.nvars(), n);
        RatFunc {
            vars,
            num,
            den: MPoly::one(n),
        }
    }

    pub fn constant(vars: &'static [&'static str], c: BigRat) -> Self {
        Self::from_poly(vars, MPoly::constant(vars.len(), c))
    }

    pub fn one(vars: &'static [&'static str]) -> Self {
        Self::constant(vars, BigRat::one())
    }

    pub fn zero(vars: &'static [&'static str]) -> Self {
        Self::constant(vars, BigRat::zero())
    }

    pub fn vars(&self) -> &'static [&'static str] {
        self.vars
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Self::new(
            self.vars,
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            vars: self.vars,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.vars, self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Self::new(self.vars, self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.vars).div(self)
    }

    pub fn eval(&self, point: &[BigRat]) -> Result<BigRat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(CoreError::Pole(format!("denominator vanishes: {self}")));
        }
        Ok(self.num.eval(point) / d)
    }

    /// Independent reduction check via the generic slow gcd.
    pub fn is_reduced_slow(&self) -> bool {
        self.num.gcd(&self.den).is_constant()
    }

    pub fn to_text(&self) -> String {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            return self.num.to_text(self.vars);
        }
        format!(
            "({}) / ({})",
            self.num.to_text(self.vars),
            self.den.to_text(self.vars)
        )
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Reduced univariate rational function over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct URat {
    num: UPoly,
    den: UPoly,
}

impl URat {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(URat {
                num,
                den: UPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        let lead = den.leading().unwrap().clone();
        if lead.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(URat { num, den })
    }

    pub fn from_poly(p: UPoly) -> Self {
        URat {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(UPoly::zero())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        URat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        Self::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn eval(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(CoreError::Pole("denominator vanishes".into()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Reads the fraction as a Laurent polynomial in `u` when the
    /// denominator is a monomial `c * u^k`; errors otherwise.
    pub fn to_laurent(&self) -> Result<super::laurent::LaurentPoly> {
        let nonzero: Vec<usize> = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect();
        if nonzero.len() != 1 {
            return Err(CoreError::InexactDivision);
        }
        let k = nonzero[0];
        let c = self.den.coeff(k);
        Ok(
            super::laurent::LaurentPoly::from_upoly(-(k as i64), &self.num)
                .scale(&c.recip()),
        )
    }

    /// True when both numerator and denominator are even polynomials.
    pub fn is_even(&self) -> bool {
        let odd = |p: &UPoly| {
            p.coeffs()
                .iter()
                .enumerate()
                .any(|(k, c)| k % 2 == 1 && !c.is_zero())
        };
        !odd(&self.num) && !odd(&self.den)
    }

    /// For an even function, evaluates at any `x` with `x^2 = sq` without
    /// needing `x` itself to be rational.
    pub fn eval_at_square(&self, sq: &BigRat) -> Result<BigRat> {
        if !self.is_even() {
            return Err(CoreError::Internal("function is not even".into()));
        }
        let half = |p: &UPoly| {
            let mut acc = BigRat::zero();
            let mut pow = BigRat::one();
            for (k, c) in p.coeffs().iter().enumerate() {
                if k % 2 == 0 {
                    acc += c * &pow;
                    pow *= sq;
                }
            }
            acc
        };
        let d = half(&self.den);
        if d.is_zero() {
            return Err(CoreError::Pole("denominator vanishes".into()));
        }
        Ok(half(&self.num) / d)
    }
}
