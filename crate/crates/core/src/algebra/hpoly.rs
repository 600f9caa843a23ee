//! Polynomials in the highest weight `h` over Laurent coefficients.
//!
//! Shapovalov pairings and the norms `N_{r,s}(t,h)` live here. Storage is
//! dense by `h`-degree: the degrees in play never exceed the level.

use std::fmt;

use super::error::Result;
use super::laurent::LaurentPoly;
use super::rational::BigRat;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HPoly {
    /// `coeffs[k]` is the coefficient of `h^k`; no trailing zeros.
    coeffs: Vec<LaurentPoly>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `h`.
    pub fn h() -> Self {
        Self::from_coeffs(vec![LaurentPoly::zero(), LaurentPoly::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `h`; `None` for zero.
    pub fn h_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Nonzero `(degree, coefficient)` pairs, ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn neg(&self) -> Self {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn mul_laurent(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitution `h -> value` (Horner).
    pub fn eval_h(&self, value: &LaurentPoly) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    /// Full rational evaluation at `(t0, h0)`; requires even `t`-support.
    pub fn eval_at(&self, t0: &BigRat, h0: &BigRat) -> Result<BigRat> {
        let mut acc = BigRat::from_integer(0.into());
        for c in self.coeffs.iter().rev() {
            acc = acc * h0 + c.eval_t(t0)?;
        }
        Ok(acc)
    }

    /// Exact re-expansion around `center`: returns `q` with
    /// `q(d) = self(center + d)` as a ring identity (Horner-style
    /// substitution of `h = center + d`).
    pub fn shift(&self, center: &LaurentPoly) -> Self {
        let linear = Self::from_coeffs(vec![center.clone(), LaurentPoly::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn is_in_t(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_in_t())
    }

    pub fn subst_t_inv(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.subst_t_inv()).collect())
    }

    pub fn subst_t_neg(&self) -> Result<Self> {
        let coeffs: Result<Vec<_>> = self.coeffs.iter().map(|c| c.subst_t_neg()).collect();
        Ok(Self::from_coeffs(coeffs?))
    }

    /// Canonical text: descending powers of `h`, Laurent coefficients in
    /// parentheses when they have more than one term.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 {
                String::new()
            } else if c.num_terms() > 1 {
                format!("({})", c.to_text())
            } else {
                c.to_text()
            };
            let hpow = match k {
                0 => String::new(),
                1 => "h".into(),
                _ => format!("h^{k}"),
            };
            let body = match (coeff.is_empty(), hpow.is_empty()) {
                (true, _) => hpow.clone(),
                (false, true) => coeff.clone(),
                (false, false) => format!("{coeff}{hpow}"),
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn shift_of_h_by_zero_center() {
        // h_{1,1}(t) = 0, so the shift of p = h is the identity.
        let p = HPoly::h();
        assert_eq!(p.shift(&LaurentPoly::zero()), p);
    }

    #[test]
    fn shift_of_square_is_binomial() {
        let gamma = LaurentPoly::from_t_terms([(2, rat(1, 1)), (0, rat(-3, 1))]);
        let p = HPoly::h().pow(2);
        let q = p.shift(&gamma);
        assert_eq!(q.coeff(2), LaurentPoly::one());
        assert_eq!(q.coeff(1), gamma.scale(&rat(2, 1)));
        assert_eq!(q.coeff(0), gamma.mul(&gamma));
    }

    #[test]
    fn shift_round_trip() {
        let gamma = LaurentPoly::from_t_terms([(1, rat(5, 2)), (-2, rat(-1, 3))]);
        let p = HPoly::from_coeffs(vec![
            LaurentPoly::t_pow(-1),
            LaurentPoly::from_int(4),
            LaurentPoly::zero(),
            LaurentPoly::t_pow(2),
        ]);
        let there = p.shift(&gamma);
        let back = there.shift(&gamma.neg());
        assert_eq!(back, p);
    }

    #[test]
    fn eval_consistency() {
        let p = HPoly::from_coeffs(vec![LaurentPoly::t_pow(1), LaurentPoly::from_int(-2)]);
        let t0 = rat(3, 2);
        let h0 = rat(7, 5);
        let direct = p.eval_at(&t0, &h0).unwrap();
        let via_h = p
            .eval_h(&LaurentPoly::constant(h0.clone()))
            .eval_t(&t0)
            .unwrap();
        assert_eq!(direct, via_h);
    }
}
