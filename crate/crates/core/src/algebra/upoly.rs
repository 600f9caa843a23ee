//! Dense univariate polynomials over the rationals.
//!
//! Internal workhorse behind Laurent-polynomial division and gcd, the
//! fraction-free eliminations, and exact interpolation. Not part of the
//! public surface.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::error::{CoreError, Result};
use super::rational::BigRat;

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: Vec<BigRat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn monomial(c: BigRat, deg: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Quotient and remainder with `rhs != 0`.
    pub fn div_rem(&self, rhs: &UPoly) -> Result<(UPoly, UPoly)> {
        let d = rhs.deg().ok_or(CoreError::DivisionByZero)?;
        let lead = rhs.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![
            BigRat::zero();
            self.coeffs.len().saturating_sub(rhs.coeffs.len()) + 1
        ];
        while rem.len() >= rhs.coeffs.len() && !rem.is_empty() {
            let k = rem.len() - 1;
            if rem[k].is_zero() {
                rem.pop();
                continue;
            }
            let q = &rem[k] / &lead;
            let shift = k - d;
            quot[shift] = q.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let t = &q * b;
                    rem[shift + j] -= t;
                }
            }
            rem.pop();
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that must be exact.
    pub fn exact_div(&self, rhs: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(rhs)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(CoreError::InexactDivision)
        }
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Primitive integer-coefficient form: `self = content * primitive` with
    /// `content` a positive rational and `primitive` having coprime integer
    /// coefficients and positive leading coefficient.
    pub fn primitive_int(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
        (BigRat::new(g, den_lcm), prim)
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS over
    /// the integers, which keeps intermediate coefficients in check).
    pub fn gcd(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() {
            let (_, p) = rhs.primitive_int();
            return from_int(&p);
        }
        if rhs.is_zero() {
            let (_, p) = self.primitive_int();
            return from_int(&p);
        }
        let (_, mut a) = self.primitive_int();
        let (_, mut b) = rhs.primitive_int();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_empty() {
                if a.last().is_some_and(|c| c.is_negative()) {
                    for c in &mut a {
                        *c = -(c.clone());
                    }
                }
                return from_int(&a);
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive(r);
        }
    }

    /// Unique interpolant of degree `< points.len()` through distinct nodes.
    pub fn interpolate(points: &[(BigRat, BigRat)]) -> UPoly {
        // Newton's divided differences, then expansion of the Newton form.
        let n = points.len();
        let mut table: Vec<BigRat> = points.iter().map(|(_, y)| y.clone()).collect();
        let mut coeffs = Vec::with_capacity(n);
        if n == 0 {
            return UPoly::zero();
        }
        coeffs.push(table[0].clone());
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
            coeffs.push(table[level].clone());
        }
        let mut acc = UPoly::zero();
        for k in (0..n).rev() {
            let root = UPoly::from_coeffs(vec![-points[k].0.clone(), BigRat::one()]);
            acc = acc.mul(&root).add(&UPoly::constant(coeffs[k].clone()));
        }
        acc
    }
}

fn from_int(v: &[BigInt]) -> UPoly {
    UPoly::from_coeffs(v.iter().map(|c| BigRat::from_integer(c.clone())).collect())
}

/// Integer pseudo-remainder of `a` by `b` (`b` nonzero, deg a >= deg b).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1;
        if r[k].is_zero() {
            r.pop();
            continue;
        }
        let q = r[k].clone();
        for c in r.iter_mut() {
            *c *= &lead;
        }
        let shift = k - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &q * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_i64};

    fn poly(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&c| rat_i64(c)).collect())
    }

    #[test]
    fn mul_div_round_trip() {
        let a = poly(&[1, 0, -3, 2]);
        let b = poly(&[-5, 1, 7]);
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert!(p.add(&UPoly::one()).exact_div(&b).is_err());
    }

    #[test]
    fn gcd_of_products() {
        let a = poly(&[-1, 1]); // x - 1
        let b = poly(&[1, 1]); // x + 1
        let g = poly(&[2, 2]).mul(&a); // 2(x+1)(x-1)
        let lhs = g.mul(&a);
        let rhs = g.mul(&b);
        let got = lhs.gcd(&rhs);
        // primitive gcd: (x+1)(x-1)
        assert_eq!(got, a.mul(&b));
    }

    #[test]
    fn interpolation_reproduces() {
        let p = poly(&[3, -2, 0, 5]);
        let pts: Vec<(BigRat, BigRat)> = (-3..=3)
            .map(|k| {
                let x = rat(k, 2);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(UPoly::interpolate(&pts), p);
    }
}
